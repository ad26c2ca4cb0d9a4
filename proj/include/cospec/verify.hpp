#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "cospec/family.hpp"
#include "cospec/graph.hpp"
#include "cospec/int_poly.hpp"
#include "cospec/spectra.hpp"

namespace cospec {

class OrderMismatch : public std::invalid_argument {
public:
    OrderMismatch(Int expected, Int got)
        : std::invalid_argument("realized order " + std::to_string(got) + " differs from p+q = " + std::to_string(expected)),
          expected(expected), got(got) {}
    Int expected;
    Int got;
};

// A candidate that fails spectral verification; signals a bug, never a valid outcome.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MateCheck {
    bool cospectral = false;
    bool isomorphic_to_source = false;

    bool is_mate() const noexcept { return cospectral && !isomorphic_to_source; }
};

// Realizes candidates and compares exact characteristic polynomials with one pineapple.
// The pineapple's polynomial is computed on first use.
class MateVerifier {
public:
    explicit MateVerifier(const PineappleParams& params) : params_(params) { params_.validate(); }

    const PineappleParams& params() const noexcept { return params_; }

    const IntPoly& source_poly() {
        if (!source_) source_ = char_poly(make_pineapple(params_));
        return *source_;
    }

    MateCheck check(const FamilySpec& spec) {
        validate(spec);
        Int order = realized_order(spec);
        if (order != params_.order()) throw OrderMismatch(params_.order(), order);
        MateCheck c;
        c.isomorphic_to_source = isomorphic_to_pineapple(spec, params_);
        c.cospectral = char_poly(realize(spec)) == source_poly();
        return c;
    }

private:
    PineappleParams params_;
    std::optional<IntPoly> source_;
};

// True iff spec realizes a graph cospectral with, and not isomorphic to, K_{p,k}^q.
inline bool verify_mate(const PineappleParams& params, const FamilySpec& spec) {
    MateVerifier v(params);
    return v.check(spec).is_mate();
}

} // namespace cospec
