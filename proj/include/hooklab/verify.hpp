#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hooklab/genfun.hpp"
#include "hooklab/partition.hpp"
#include "hooklab/qseries.hpp"
#include "hooklab/report.hpp"

namespace hooklab {

/// Brute-force oracles, assembled by enumeration.

/// sum over all partitions of n <= trunc of x^{n_t} q^n.
QSeries brute_force_hook_series(int t, int trunc);

/// sum over self-conjugate partitions of n <= trunc of x^{n_t} q^n.
QSeries brute_force_sc_hook_series(int t, int trunc);

/// Number of self-conjugate t-cores of n.
mpz_class sc_tcore_count(int t, int n);

/// Coefficient-for-coefficient comparison; the mismatch (when any) reports
/// the smallest disagreeing q-exponent, then the smallest x-exponent.
VerificationReport compare_series(const std::string& target, const QSeries& lhs,
                                  const QSeries& rhs);

/// Each target checks a closed form against an independently computed
/// oracle. The optional rhs_override substitutes a caller-supplied series
/// for the closed form; the mutation-sensitivity harness uses it to confirm
/// that corrupted coefficients are detected.
VerificationReport verify_thm_1_1(int t, int trunc, const QSeries* rhs_override = nullptr);
VerificationReport verify_thm_1_2(int t, int trunc, int oracle_trunc = 30,
                                  const QSeries* rhs_override = nullptr);
VerificationReport verify_thm_3_1(int trunc, const std::vector<mpq_class>& r_points,
                                  const QSeries* rhs_override = nullptr);
VerificationReport verify_lemma_3_2(const std::vector<mpq_class>& sqrt_a_points, int trunc);
VerificationReport verify_lemma_3_3(int t, int trunc, const QSeries* rhs_override = nullptr);
VerificationReport verify_bbcfw(int m_max, int n_max, int oracle_n_max = 30);
VerificationReport verify_littlewood_suite(int n_max, int t_max);
VerificationReport verify_table_1();

/// a_t*(n) for t = 1..n via the convolution formula, then a final ">n" row,
/// which is identically zero since no hook exceeds the partition size.
std::vector<std::pair<std::string, mpz_class>> a_star_table(int n);

struct SuiteOptions {
    std::vector<std::string> targets; // e.g. {"all"} or {"thm1.1", "bbcfw"}
    std::optional<int> t;             // restrict per-t targets to a single t
    std::optional<int> qmax;          // override default truncations
    int jobs = 1;
};

/// Expands targets to individual checks and runs them (in parallel when
/// jobs > 1). Reports come back in a deterministic order. Throws
/// std::invalid_argument for unknown target names or bad parameters.
std::vector<VerificationReport> run_verification_suite(const SuiteOptions& options);

} // namespace hooklab
