#pragma once

// One identity check: parameters, closed-form value, oracle value, errors,
// tail bound, the measure convention under which the match holds, the
// oracle/closed ratio, and the verdict.
//
// pass is abs_err <= tolerance + tail_bound. For oracle families whose
// closed form is only pinned up to a measure normalization, the suite uses
// calibration: the ratio is fitted on one point and required to be invariant
// across the sweep.

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "padiclab/numeric.hpp"

namespace padiclab {

using ParamValue = std::variant<long long, double, std::string>;
using ParamList = std::vector<std::pair<std::string, ParamValue>>;

struct VerificationRecord {
    std::string identity;
    ParamList params;
    cplx closed{0.0, 0.0};
    cplx oracle{0.0, 0.0};
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tail_bound = 0.0;
    std::string convention = "n/a";
    cplx ratio{0.0, 0.0};
    bool pass = false;
    bool warning_grade = false; // demonstration checks: reported, never fatal
};

inline VerificationRecord make_record(std::string identity, ParamList params, cplx closed,
                                      cplx oracle, double tail_bound, double tolerance,
                                      std::string convention) {
    VerificationRecord rec;
    rec.identity = std::move(identity);
    rec.params = std::move(params);
    rec.closed = closed;
    rec.oracle = oracle;
    rec.tail_bound = tail_bound;
    rec.convention = std::move(convention);
    rec.abs_err = std::abs(closed - oracle);
    double scale = std::max(std::abs(closed), std::abs(oracle));
    rec.rel_err = scale > 0.0 ? rec.abs_err / scale : 0.0;
    rec.ratio = std::abs(closed) > 0.0 ? oracle / closed : cplx(0.0, 0.0);
    rec.pass = std::isfinite(rec.abs_err) && rec.abs_err <= tolerance + tail_bound;
    return rec;
}

// pass criterion on the relative scale; tail bound converted to relative
inline VerificationRecord make_record_rel(std::string identity, ParamList params, cplx closed,
                                          cplx oracle, double tail_bound, double rel_tolerance,
                                          std::string convention) {
    double scale = std::max(std::abs(closed), std::abs(oracle));
    return make_record(std::move(identity), std::move(params), closed, oracle, tail_bound,
                       rel_tolerance * std::max(scale, 1e-300), std::move(convention));
}

// a boolean check dressed as a record (closed = observed, oracle = required)
inline VerificationRecord make_predicate_record(std::string identity, ParamList params,
                                                bool holds, double observed, double required,
                                                std::string convention = "exact") {
    VerificationRecord rec;
    rec.identity = std::move(identity);
    rec.params = std::move(params);
    rec.closed = cplx(observed, 0.0);
    rec.oracle = cplx(required, 0.0);
    rec.abs_err = std::abs(observed - required);
    rec.rel_err = rec.abs_err / std::max({std::abs(observed), std::abs(required), 1e-300});
    rec.tail_bound = 0.0;
    rec.convention = std::move(convention);
    rec.ratio = cplx(1.0, 0.0);
    rec.pass = holds;
    return rec;
}

} // namespace padiclab
