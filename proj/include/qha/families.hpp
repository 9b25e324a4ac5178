#pragma once
#include "dsl.hpp"

namespace qha {

// A presentation built by one of the family constructors, together with a
// stable name per relation (for picking out distinguished relations in tests
// and reports) and the numeric parameters it was built from.
struct FamilyPresentation {
    Presentation pres;
    std::vector<std::string> rel_names;
    int p = 0, q = 0, k = 0, s = 0; // self-injective family
    int n = 0;                      // gamma-star family

    int rel(const std::string& name) const; // index into pres.relations

    // self-injective family paths (1-based vertex row i, indices mod k)
    Path alpha_run(int i) const; // alpha{i}_0 ... alpha{i}_q : i -> i-1
    Path beta_run(int i) const;  // beta{i}_0 ... beta{i}_p : i-1 -> i+s
    Path rho(int i) const;       // alpha_run(i) . beta_run(i) : i -> i+s

    // gamma-star: the cycle beta1 ... beta{n} at v1
    Path beta_cycle() const;
};

// wrap x into 1..k
int mod1(int x, int k);

// The one-parametric self-injective algebra with parameters (p,q,k,s,lam):
// k alpha-runs of length q+1 and k beta-runs of length p+1 on k(1+p+q)
// vertices, with the run composites rho_i all identified (rho_1 scaled by
// lam). minimal=false emits the full defining relation list; minimal=true
// emits the reduced list (needs p,q >= 1).
FamilyPresentation build_lambda_family(const Field& f, int p, int q, int k, int s,
                                       const Scalar& lam, bool minimal = false);

// The algebra with a length-n beta-cycle and two extra 2-cycles alpha/gamma
// through v{n+1}, v{n+2}.
FamilyPresentation build_gamma_star(const Field& f, int n, bool minimal = false);

// Deformation of the self-injective family: the reduced list with the last
// rho-identification replaced by (f2_1_1 - t rho_1), plus the socle products
// rho_1 a and a rho_1 for every composable arrow a.
FamilyPresentation build_lambda_eta(const Field& f, int p, int q, int k, int s,
                                    const Scalar& lam, const Scalar& t);

// Deformation of gamma-star along the degree-lowering cocycle: f2_1_2 gains
// -t beta1...beta{n}, each f2_3_j gains +t beta{j}...beta{n}beta1...beta{j}.
// Needs n >= 2 (for n = 1 the deforming term has length 1).
FamilyPresentation build_gamma_eta2(const Field& f, int n, const Scalar& t);

// Same presentation with arrows re-declared in the given order (entries are
// current arrow indices / names); relation terms are re-sorted to match.
Presentation permute_arrows(const Presentation& src, const std::vector<int>& order);
Presentation permute_arrows(const Presentation& src, const std::vector<std::string>& names);

// Small acyclic quiver with monomial relations, deterministic in the seed;
// total dimension is at most 12, so the slow direct cohomology oracle accepts it.
Presentation random_monomial_presentation(const Field& f, std::uint64_t seed);

} // namespace qha
