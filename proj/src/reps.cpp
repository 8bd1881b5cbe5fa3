#include "qdilog/reps.hpp"

#include "qdilog/errors.hpp"

namespace qdilog {

std::string GenId::str() const {
    const char* base = type == GenType::Eps ? "eps" : type == GenType::Phi ? "phi" : "K";
    return std::string(base) + std::to_string(index);
}

const OperatorElement& PositiveRep::gen(GenType t, int i) const {
    auto it = gens.find(GenId{t, i});
    if (it == gens.end()) throw InvalidParameter("PositiveRep: unknown generator");
    return it->second;
}

namespace {

// [x] e(P) = e^{pi b (-x + 2P)} + e^{pi b (x + 2P)} with x a linear form in
// the u_k and lambda_k and P a linear form in the p_k.
OperatorElement bracket(int nvars, int npars, const std::vector<int>& xu,
                        const std::vector<int>& xl, const std::vector<int>& pp) {
    OperatorElement e(nvars, npars);
    for (int sign : {-1, +1}) {
        Exponents ex(nvars, npars);
        for (int k = 0; k < nvars; ++k) {
            ex.xi(k) = sign * xu[std::size_t(k)];
            ex.eta(k) = 2 * pp[std::size_t(k)];
        }
        for (int k = 0; k < npars; ++k) ex.nu(k) = sign * xl[std::size_t(k)];
        e.add_monomial(ex, PhaseCoefficient::one());
    }
    return e;
}

// single exponential e^{pi b (xu.u + xl.lambda)}
OperatorElement cartan_exp(int nvars, int npars, const std::vector<int>& xu,
                           const std::vector<int>& xl) {
    OperatorElement e(nvars, npars);
    Exponents ex(nvars, npars);
    for (int k = 0; k < nvars; ++k) ex.xi(k) = xu[std::size_t(k)];
    for (int k = 0; k < npars; ++k) ex.nu(k) = xl[std::size_t(k)];
    e.add_monomial(ex, PhaseCoefficient::one());
    return e;
}

// q^{k/4} in the grading slot matching the rep's units
PhaseCoefficient qq(const PositiveRep& rep, int quarters) {
    return rep.dual_units ? PhaseCoefficient::qt_quarter_power(quarters)
                          : PhaseCoefficient::q_quarter_power(quarters);
}

}  // namespace

PositiveRep build_sl2() {
    PositiveRep rep;
    rep.rank = 1;
    rep.cartan = {{2}};
    rep.nvars = 1;
    rep.npars = 1;

    // eps = [u - lambda] e(-p), phi = [-u - lambda] e(p), K = e^{-2 pi b u}
    rep.gens[{GenType::Eps, 1}] = bracket(1, 1, {1}, {-1}, {-1});
    rep.gens[{GenType::Phi, 1}] = bracket(1, 1, {-1}, {-1}, {1});
    rep.gens[{GenType::K, 1}] = cartan_exp(1, 1, {-2}, {0});
    return rep;
}

PositiveRep build_sl3() {
    PositiveRep rep;
    rep.rank = 2;
    rep.cartan = {{2, -1}, {-1, 2}};
    rep.nvars = 3;  // (u, v, w)
    rep.npars = 2;

    // eps1 = [v - w] e(-p_v) + [u] e(-p_v + p_w - p_u)
    rep.gens[{GenType::Eps, 1}] =
        bracket(3, 2, {0, 1, -1}, {0, 0}, {0, -1, 0}) +
        bracket(3, 2, {1, 0, 0}, {0, 0}, {-1, -1, 1});
    // eps2 = [w] e(-p_w)
    rep.gens[{GenType::Eps, 2}] = bracket(3, 2, {0, 0, 1}, {0, 0}, {0, 0, -1});
    // phi1 = [-v + u - 2 lambda1] e(p_v)
    rep.gens[{GenType::Phi, 1}] = bracket(3, 2, {1, -1, 0}, {-2, 0}, {0, 1, 0});
    // phi2 = [-2u + v - w - 2 lambda2] e(p_w) + [-u - 2 lambda2] e(p_u)
    rep.gens[{GenType::Phi, 2}] =
        bracket(3, 2, {-2, 1, -1}, {0, -2}, {0, 0, 1}) +
        bracket(3, 2, {-1, 0, 0}, {0, -2}, {1, 0, 0});
    // K1 = e^{-pi b (-u + 2v - w + 2 lambda1)}, K2 = e^{-pi b (2u - v + 2w + 2 lambda2)}
    rep.gens[{GenType::K, 1}] = cartan_exp(3, 2, {1, -2, 1}, {-2, 0});
    rep.gens[{GenType::K, 2}] = cartan_exp(3, 2, {-2, 1, -2}, {0, -2});
    return rep;
}

void RelationReport::add(std::string name, OperatorElement diff) {
    bool pass = diff.is_zero();
    all_pass = all_pass && pass;
    entries.push_back(RelationEntry{std::move(name), std::move(diff), pass});
}

RelationReport check_defining_relations(const PositiveRep& rep) {
    RelationReport report;
    const auto& A = rep.cartan;
    const std::string qname = rep.dual_units ? "qt" : "q";

    for (int i = 1; i <= rep.rank; ++i) {
        const auto& Ki = rep.gen(GenType::K, i);
        for (int j = 1; j <= rep.rank; ++j) {
            const int aij = A[std::size_t(i - 1)][std::size_t(j - 1)];
            const auto& ej = rep.gen(GenType::Eps, j);
            const auto& fj = rep.gen(GenType::Phi, j);
            report.add("K" + std::to_string(i) + "_eps" + std::to_string(j) + "_exchange_" + qname,
                       Ki * ej - qq(rep, 4 * aij) * (ej * Ki));
            report.add("K" + std::to_string(i) + "_phi" + std::to_string(j) + "_exchange_" + qname,
                       Ki * fj - qq(rep, -4 * aij) * (fj * Ki));
        }
    }

    for (int i = 1; i <= rep.rank; ++i)
        for (int j = 1; j <= rep.rank; ++j) {
            const auto& ei = rep.gen(GenType::Eps, i);
            const auto& fj = rep.gen(GenType::Phi, j);
            OperatorElement diff = commutator(ei, fj);
            if (i == j) {
                const auto& Ki = rep.gen(GenType::K, i);
                // rescaling by 2 sin(pi b^2) = -i (q - q^{-1}) turns
                // (K - K^{-1})/(q - q^{-1}) into (q - q^{-1})(K^{-1} - K)
                PhaseCoefficient qmqi = qq(rep, 4) - qq(rep, -4);
                diff = diff - qmqi * (Ki.inverse_monomial() - Ki);
            }
            report.add("eps" + std::to_string(i) + "_phi" + std::to_string(j) + "_commutator",
                       std::move(diff));
        }

    for (int i = 1; i <= rep.rank; ++i)
        for (int j = 1; j <= rep.rank; ++j) {
            if (i == j || A[std::size_t(i - 1)][std::size_t(j - 1)] != -1) continue;
            PhaseCoefficient qpqi = qq(rep, 4) + qq(rep, -4);
            for (GenType t : {GenType::Eps, GenType::Phi}) {
                const auto& gi = rep.gen(t, i);
                const auto& gj = rep.gen(t, j);
                OperatorElement diff = gi * gi * gj - qpqi * (gi * gj * gi) + gj * gi * gi;
                report.add(std::string("serre_") + (t == GenType::Eps ? "eps" : "phi") + "_" +
                               std::to_string(i) + std::to_string(j),
                           std::move(diff));
            }
        }

    for (int i = 1; i <= rep.rank; ++i)
        for (int j = i + 1; j <= rep.rank; ++j)
            report.add("K" + std::to_string(i) + "_K" + std::to_string(j) + "_commute",
                       commutator(rep.gen(GenType::K, i), rep.gen(GenType::K, j)));

    return report;
}

OperatorElement lusztig_T(const PositiveRep& rep, int source_index, int target_index) {
    if (source_index == target_index) {
        const auto& phi = rep.gen(GenType::Phi, source_index);
        const auto& K = rep.gen(GenType::K, source_index);
        return qq(rep, 4) * (phi * K.inverse_monomial());
    }
    const int aij =
        rep.cartan[std::size_t(source_index - 1)][std::size_t(target_index - 1)];
    if (aij != -1)
        throw InvalidParameter("lusztig_T: two-index form requires a_ij = -1");
    const auto& ei = rep.gen(GenType::Eps, source_index);
    const auto& ej = rep.gen(GenType::Eps, target_index);
    OperatorElement numerator = qq(rep, 2) * (ej * ei) - qq(rep, -2) * (ei * ej);
    return numerator.divide_exact(qq(rep, 4) - qq(rep, -4));
}

PositiveRep dual_rep(const PositiveRep& rep) {
    PositiveRep d = rep;
    d.dual_units = !rep.dual_units;
    for (auto& [id, g] : d.gens) g = g.substitute_dual();
    return d;
}

long eta_degree(const Exponents& e) {
    long deg = 0;
    for (int k = 0; k < e.nvars; ++k) deg += e.eta(k) + e.etat(k);
    return deg;
}

CrossCommutationReport cross_commutation_check(const PositiveRep& rep, const PositiveRep& dual) {
    CrossCommutationReport report;
    for (const auto& [gid, g] : rep.gens)
        for (const auto& [hid, h] : dual.gens) {
            int gm = 0;
            for (const auto& [ge, gc] : g.monomials()) {
                (void)gc;
                int hm = 0;
                for (const auto& [he, hc] : h.monomials()) {
                    (void)hc;
                    SymplecticPairing s = symplectic(ge, he);
                    CrossPairEntry entry;
                    entry.left = gid.str() + "[" + std::to_string(gm) + "]";
                    entry.right = hid.str() + "~[" + std::to_string(hm) + "]";
                    entry.sigma_cross = s.cross;
                    // m m~ = zeta_8^{2 sigma} m~ m (sigma_bb = sigma_tt = 0
                    // for a pure-b vs pure-b~ pair)
                    PhaseCoefficient exch =
                        PhaseCoefficient::unit(int(2 * s.bb), int(2 * s.tt), 2 * s.cross);
                    entry.pass = exch.is_plus_minus_one();
                    if (entry.pass)
                        entry.exchange_phase = (s.cross % 4 == 0) ? "+1" : "-1";
                    else
                        entry.exchange_phase = exch.str();
                    report.all_pass = report.all_pass && entry.pass;
                    report.entries.push_back(std::move(entry));
                    ++hm;
                }
                ++gm;
            }
        }
    return report;
}

}  // namespace qdilog
