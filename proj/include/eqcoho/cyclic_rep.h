#pragma once

// Representations of a cyclic group C_n over F_p and their group cohomology
// computed from the 2-periodic resolution with differentials (sigma - 1) and
// the norm N = 1 + sigma + ... + sigma^(n-1).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eqcoho/fp_linalg.h"

namespace eqcoho {

class CyclicGroup {
public:
    explicit CyclicGroup(int n);
    int order() const { return n_; }
    bool operator==(const CyclicGroup&) const = default;

private:
    int n_;
};

/// F_p[C_n]-module given by the matrix of the generator.
/// sigma^n = identity is verified on construction.
class GModule {
public:
    GModule(CyclicGroup group, SparseFpMatrix sigma);
    GModule(CyclicGroup group, const FpMatrix& sigma);

    const CyclicGroup& group() const { return group_; }
    int n() const { return group_.order(); }
    std::uint32_t p() const { return sigma_.p(); }
    std::size_t dim() const { return sigma_.rows(); }
    const SparseFpMatrix& sigma() const { return sigma_; }
    FpMatrix sigma_dense() const { return sigma_.to_dense(); }
    /// p does not divide n: all cohomology above degree 0 vanishes.
    bool semisimple_regime() const { return n() % static_cast<int>(p()) != 0; }

private:
    CyclicGroup group_;
    SparseFpMatrix sigma_;
};

GModule trivial_module(int n, std::uint32_t p, std::size_t dim);
/// F_p[C_n] with sigma the n-cycle e_i -> e_{i+1}.
GModule regular_module(int n, std::uint32_t p);
/// Block-diagonal sum. The empty sum is the zero module over (n, p).
GModule direct_sum(int n, std::uint32_t p, std::span<const GModule> summands);

SparseFpMatrix sigma_minus_identity(const GModule& m);
/// N = sum_{k=0}^{n-1} sigma^k.
SparseFpMatrix norm_operator(const GModule& m);
/// sum_{k=1}^{n-1} k sigma^k, coefficients reduced mod p.
SparseFpMatrix weighted_sum_operator(const GModule& m);

/// The ranks that determine every H^k(C_n; M).
struct CohomologyProfile {
    std::size_t dim = 0;
    std::size_t rank_sigma_minus_identity = 0;
    std::size_t rank_norm = 0;
    bool semisimple = false;

    /// k = 0: invariants. Even k > 0: M^G / N M. Odd k: ker N / (sigma - 1) M.
    std::size_t dim_at(int k) const;
};

CohomologyProfile cohomology_profile(const GModule& m);
std::size_t group_cohomology_dim(const GModule& m, int k);

/// Restriction to the subgroup generated by sigma^index (order n / index).
GModule restrict_module(const GModule& m, int index);

/// Norm vanishes, and ker(sigma - 1) lies inside im(sigma - 1).
struct FreenessHypotheses {
    bool norm_zero = false;
    bool kernel_in_image = false;
    bool both() const { return norm_zero && kernel_in_image; }
    bool operator==(const FreenessHypotheses&) const = default;
};

FreenessHypotheses freeness_hypotheses(const GModule& m);

/// {"n": int, "p": int, "dim": int, "sigma": [[int]]}, sigma row-major.
GModule gmodule_from_json(const std::string& text);
std::string gmodule_to_json(const GModule& m);

}  // namespace eqcoho
