#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdilog/weyl.hpp"

namespace qdilog {

enum class GenType { Eps, Phi, K };

struct GenId {
    GenType type;
    int index;  // 1-based root index
    friend bool operator<(const GenId& x, const GenId& y) {
        if (x.type != y.type) return x.type < y.type;
        return x.index < y.index;
    }
    friend bool operator==(const GenId& x, const GenId& y) {
        return x.type == y.type && x.index == y.index;
    }
    std::string str() const;
};

// Explicit positive representation: rescaled generators eps_i, phi_i
// (2 sin(pi b^2) times the Chevalley E_i, F_i) and K_i, stored as exact
// operator elements over nvars (u, p) pairs and npars central lambda slots.
struct PositiveRep {
    int rank = 0;
    std::vector<std::vector<int>> cartan;
    int nvars = 0;
    int npars = 0;
    bool dual_units = false;  // formulas in b^{-1} units
    std::map<GenId, OperatorElement> gens;

    const OperatorElement& gen(GenType t, int i) const;
};

// rank 1, one lambda slot, acting on functions of a single u
PositiveRep build_sl2();
// rank 2 (A2 Cartan matrix), reduced word s2 s1 s2, variables (u, v, w),
// two lambda slots
PositiveRep build_sl3();

struct RelationEntry {
    std::string name;
    OperatorElement difference;  // left minus right
    bool pass = false;
};

struct RelationReport {
    std::vector<RelationEntry> entries;
    bool all_pass = true;

    void add(std::string name, OperatorElement diff);
};

// Exact verification of the defining relation suite in rescaled form:
//   K_i eps_j = q^{a_ij} eps_j K_i,      K_i phi_j = q^{-a_ij} phi_j K_i,
//   [eps_i, phi_j] = delta_ij (q - q^{-1}) (K_i^{-1} - K_i),
//   both Serre families for a_ij = -1,   K_i K_j = K_j K_i.
// For a dual-units rep the same identities are checked with q~.
RelationReport check_defining_relations(const PositiveRep& rep);

// Modified Lusztig transform on rescaled generators:
//   i == j:  T_i(eps_i) = q phi_i K_i^{-1}
//   i != j (a_ij = -1):
//            T_j(eps_i) = (q^{1/2} eps_j eps_i - q^{-1/2} eps_i eps_j) / (q - q^{-1}).
// Throws NotDivisible when the numerator fails exact division.
OperatorElement lusztig_T(const PositiveRep& rep, int source_index, int target_index);

// b <-> b^{-1} image of the whole representation.
PositiveRep dual_rep(const PositiveRep& rep);

struct CrossPairEntry {
    std::string left;   // generator/monomial label on the b side
    std::string right;  // on the b^{-1} side
    long sigma_cross = 0;
    std::string exchange_phase;  // "+1", "-1", or the offending phase
    bool pass = false;           // exchange phase in {+1, -1}
};

struct CrossCommutationReport {
    std::vector<CrossPairEntry> entries;
    bool all_pass = true;
};

// Checks that every (b-monomial, b^{-1}-monomial) pair of generators
// exchanges with phase exactly +-1: the exchange phase is
// zeta_8^{2 sigma_cross}, so the requirement is sigma_cross even, with -1
// exactly when sigma_cross = 2 mod 4.
CrossCommutationReport cross_commutation_check(const PositiveRep& rep, const PositiveRep& dual);

// Sum of momentum exponents (eta and eta~) of a monomial; constant across
// the monomials of each generator and additive under products, which makes
// it a cheap bookkeeping invariant for the Serre sums.
long eta_degree(const Exponents& e);

}  // namespace qdilog
