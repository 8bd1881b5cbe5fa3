#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qdilog/dilog.hpp"
#include "qdilog/gaussian_lab.hpp"
#include "qdilog/reps.hpp"

namespace qdilog {

struct SuiteConfig {
    double b = 0.7;
    bool allow_resonant_b = false;
    std::map<std::string, double> tol_overrides;
    QuadratureSpec quad;
    std::string format = "text";  // text | json | csv
    std::uint64_t seed = 1;
    std::string mutate;  // "" | "serre" | "kexchange" | "coeff2"
};

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0.0;
    double tolerance = 0.0;
    std::string property;  // identity or property being checked
};

struct RelationSummary {
    std::string relation;
    bool pass = false;
    int residual_monomial_count = 0;
    std::string residual_preview;
};

struct LabResidualRow {
    std::string relation;
    double b = 0.0;
    int wave_id = 0;
    std::string gridpoint;
    double residual = 0.0;
};

struct SuiteReport {
    std::string suite;
    SuiteConfig config;
    std::vector<CheckResult> checks;       // sorted by name before serialization
    std::vector<RelationSummary> relations;  // exact relation suites, when applicable
    std::vector<LabResidualRow> lab_rows;    // analytic-lab residuals, when applicable

    bool all_pass() const;
    std::string summary_line() const;  // "PASS k/k" or "FAIL j/k"
};

// suite in {dilog, qweyl, sl2, sl3, duality, crosscheck, all}
SuiteReport run_suite(const std::string& suite, const SuiteConfig& config);

std::string report_json(const SuiteReport& report);
std::string report_csv(const SuiteReport& report);
std::string report_text(const SuiteReport& report);

std::string relation_report_json(const RelationReport& report);
std::string gb_value_json(const GbValue& v);

// Deterministic uniform double in [lo, hi) from a seeded engine; reports
// depend only on (config, seed).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    double uniform(double lo, double hi);
    int uniform_int(int lo, int hi);  // inclusive ends

  private:
    std::uint64_t next();
    std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Granular sweeps shared by the CLI suites and the acceptance runner.
// ---------------------------------------------------------------------------
namespace sweeps {

// Functional-equation residual over random strip points, both the z + b and
// z + 1/b shift checked against gb_strip values only (the b^{-1} direction
// is independent of the strip reduction, which takes b-steps).
double functional_equation_max(const ModularParameter& p, int samples, bool inv_shift,
                               std::uint64_t seed, const QuadratureSpec& quad);

double reflection_max(const ModularParameter& p, int samples, std::uint64_t seed,
                      const QuadratureSpec& quad);

double conjugation_max(const ModularParameter& p, int samples, std::uint64_t seed,
                       const QuadratureSpec& quad);

double critical_line_max(const ModularParameter& p, const QuadratureSpec& quad);

struct AsymptoticsResult {
    double dev5 = 0, dev8 = 0, dev12 = 0;  // |G - limit| at |y| = 5, 8, 12
    double err5 = 0, err8 = 0, err12 = 0;  // quadrature error estimates
    bool monotone(double floor) const {
        return dev8 <= dev5 + err5 + err8 + floor && dev12 <= dev8 + err8 + err12 + floor;
    }
};
AsymptoticsResult asymptotics(const ModularParameter& p, bool upper, const QuadratureSpec& quad);

// fraction of samples where doubling the panel count drifts more than the
// reported error estimate
double error_honesty_violation_rate(const ModularParameter& p, int samples, std::uint64_t seed,
                                    const QuadratureSpec& quad);

double wavepacket_unitarity_max(const ModularParameter& p,
                                const std::vector<double>& lambdas, const QuadratureSpec& quad);

double monomial_pair_agreement_max(double b, int pairs, std::uint64_t seed);

}  // namespace sweeps

}  // namespace qdilog
