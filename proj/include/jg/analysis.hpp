#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "jg/decomposition.hpp"

namespace jg {

/// decompose(G_n) for every n in 1..n_max, index n - 1. Work is spread over
/// hardware threads; results are always in ascending n.
std::vector<Decomposition> decompose_range(int n_max);

struct SweepRow {
    int n;
    std::size_t d_size;
    std::size_t a_size;
    std::size_t c_size;
    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

std::vector<SweepRow> sweep_decompositions(int n_max);
std::vector<SweepRow> sweep_rows(const std::vector<Decomposition>& decs);

struct MembershipCell {
    int n;
    Label k;
    VertexClass cls;
    friend bool operator==(const MembershipCell&, const MembershipCell&) = default;
};

struct MembershipGrid {
    std::vector<MembershipCell> cells;  // sorted by n then k
    /// Reference lines n/3, n/2, 2n/3 as numerator/denominator pairs.
    static constexpr int reference_lines[3][2] = {{1, 3}, {1, 2}, {2, 3}};
};

MembershipGrid membership_grid(int n_max);
MembershipGrid membership_grid(const std::vector<Decomposition>& decs);

struct PrimeClass {
    Label p;
    VertexClass cls;
};

/// Interval counts for one n. All comparisons are exact integer
/// comparisons on 2k, 3k against n, 2n.
struct BandRow {
    int n;
    std::size_t a_size;
    std::size_t a_lo_count;   // |A n [1, n/3]|
    std::size_t a_mid_count;  // |A n (n/3, n/2)|
    std::size_t d_mid_count;  // |D n [n/2, 2n/3]|
    std::size_t mid_width;    // number of integers in [n/2, 2n/3]
    std::vector<PrimeClass> upper_primes;  // primes p with n/2 < p < n
};

struct BandSummary {
    int n_max = 0;
    /// True iff A has no element strictly between n/3 and n/2 for every n.
    bool a_gap_holds = true;
    std::vector<int> a_gap_violations;
    std::size_t a_total = 0;
    std::size_t a_at_most_third = 0;
};

std::vector<BandRow> band_report(int n_max);
std::vector<BandRow> band_report(const std::vector<Decomposition>& decs);
BandSummary summarize_bands(const std::vector<BandRow>& rows);

struct LemoineRow {
    int n;
    std::optional<Label> even_witness;  // smallest even element of D(G_n)
};

std::vector<LemoineRow> lemoine_check(int n_from, int n_to);
std::vector<LemoineRow> lemoine_rows(const std::vector<Decomposition>& decs, int n_from, int n_to);

struct PrimeViolation {
    int n;
    Label p;
    VertexClass cls;
};

/// For each n in 3..n_max with at least two primes in (n/2, n), every such
/// prime must lie in D(G_n). Returns the ones that do not.
std::vector<PrimeViolation> large_prime_check(int n_max);
std::vector<PrimeViolation> large_prime_violations(const std::vector<Decomposition>& decs);

/// Smallest n0 with 1 in A(G_n) for all n0 <= n <= n_max.
std::optional<int> one_in_a_threshold(int n_max);
std::optional<int> one_in_a_threshold(const std::vector<Decomposition>& decs);

bool is_prime(int k) noexcept;

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string membership_csv(const MembershipGrid& grid);
std::string bands_csv(const std::vector<BandRow>& rows);
std::string lemoine_csv(const std::vector<LemoineRow>& rows);

struct AnalysisOutput {
    std::vector<std::filesystem::path> files;
    BandSummary bands;
    std::optional<int> one_in_a_from;
};

/// Writes sweep.csv, membership.csv, bands.csv and lemoine.csv for 1..n_max.
AnalysisOutput write_analysis(const std::filesystem::path& dir, int n_max);

}  // namespace jg
