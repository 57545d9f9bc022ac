#ifndef GCX_CHAINMAPS_HPP
#define GCX_CHAINMAPS_HPP

#include "biweight.hpp"
#include "flavor.hpp"
#include "lincomb.hpp"

#include <string>
#include <vector>

namespace gcx {

// Sum over all edge orientations of an undirected >=3-valent class, with the
// direction-flip signs of the odd-parity orientation convention, landing in
// the directed complex.
LinComb orient_sum(const Graph& g, int k);

// Quotient projections of directed classes (drop what the named subcomplex
// spans): /s drops sourced classes, /t targeted ones, /st those with both,
// and the wheel quotient drops classes with a source or a target.
LinComb project_mod_s(const LinComb& lc);
LinComb project_mod_t(const LinComb& lc);
LinComb project_mod_st(const LinComb& lc);
LinComb project_mod_spt(const LinComb& lc);

// Differential of dGC_k followed by the named projection.
enum class Quot { None, ModS, ModT, ModST, ModSPT };
LinComb quotient_differential(const LinComb& lc, int k, Quot q);

// Differential of the mono-decorated target complex: the decorated
// differential followed by the projection killing ZeroZero-carrying terms.
LinComb mplus_differential(const LinComb& lc, int k);
// Its d_s / d_u parts (univalent-count classification), same projection.
std::pair<LinComb, LinComb> mplus_differential_split(const LinComb& lc, int k);

// The decoration maps. Sources live in dGC_k (b) or its quotients (f^s on
// dGC/dGC^s, f^t on dGC/dGC^t); classes on which the decoration is undefined
// (sourced for f^s, targeted for f^t) map to zero.
LinComb map_b(const LinComb& lc, int k);  // Γ -> Γ(ω)
LinComb map_fs(const LinComb& lc, int k); // Γ -> Γ(∞₁/0)
LinComb map_ft(const LinComb& lc, int k); // Γ -> Γ(0/∞₁)

// a(Γ₁,Γ₂) = d_u(Γ₁(∞₁/0) + Γ₂(0/∞₁)) with Γ₁ in dGC/dGC^s[1] and Γ₂ in
// dGC/dGC^t[1].
LinComb map_a(const LinComb& g1, const LinComb& g2, int k);

// Element of the suspended mapping cone of P : dGC -> dGC/dGC^s ⊕ dGC/dGC^t.
struct ConeElement {
    LinComb g;  // dGC_k component
    LinComb g1; // dGC/dGC^s[1] component (no-source classes)
    LinComb g2; // dGC/dGC^t[1] component (no-target classes)

    bool is_zero() const { return g.is_zero() && g1.is_zero() && g2.is_zero(); }
};

// d_c(Γ,(Γ₁,Γ₂)) = (dΓ, (−P(Γ)−dΓ₁, −P(Γ)−dΓ₂)), quotient differentials on
// the shifted components (the shift's −d is part of the displayed formula).
ConeElement cone_differential(const ConeElement& x, int k);

// a⊕b applied to a cone element: Γ(ω) + d_u(Γ₁(∞₁/0) + Γ₂(0/∞₁)).
LinComb map_ab(const ConeElement& x, int k);

struct ChainMapReport {
    std::string name;
    int k = 0;
    int v_max = 0, e_max = 0;
    long checked = 0;
    bool pass = false;
    std::vector<std::string> witnesses; // generator keys with nonzero defect
};

// Verify the named map ("f", "b", "fs", "ft", "a", "aplusb", "cone";
// "b_corrupt" is the intentional negative control) on all generators of its
// source complex with v <= v_max, e <= e_max.
ChainMapReport verify_chain_map(const std::string& name, int k, int v_max, int e_max);

std::string chain_map_report_to_json(const ChainMapReport& r);

} // namespace gcx

#endif
