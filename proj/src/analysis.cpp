#include "jg/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "jg/graph.hpp"

namespace jg {

bool is_prime(int k) noexcept {
    if (k < 2) return false;
    for (int d = 2; d * d <= k; ++d)
        if (k % d == 0) return false;
    return true;
}

std::vector<Decomposition> decompose_range(int n_max) {
    if (n_max < 1) throw DomainError("n_max must be >= 1, got " + std::to_string(n_max));
    std::vector<Decomposition> out(static_cast<std::size_t>(n_max));
    std::atomic<int> next{1};
    auto worker = [&] {
        for (int n = next++; n <= n_max; n = next++) out[static_cast<std::size_t>(n - 1)] = decompose(build_divisibility_graph(n));
    };
    const unsigned threads = std::max(1u, std::min(std::thread::hardware_concurrency(), static_cast<unsigned>(n_max)));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    return out;
}

std::vector<SweepRow> sweep_rows(const std::vector<Decomposition>& decs) {
    std::vector<SweepRow> rows;
    rows.reserve(decs.size());
    for (std::size_t i = 0; i < decs.size(); ++i)
        rows.push_back({static_cast<int>(i + 1), decs[i].d.size(), decs[i].a.size(), decs[i].c.size()});
    return rows;
}

std::vector<SweepRow> sweep_decompositions(int n_max) { return sweep_rows(decompose_range(n_max)); }

MembershipGrid membership_grid(const std::vector<Decomposition>& decs) {
    MembershipGrid grid;
    for (std::size_t i = 0; i < decs.size(); ++i) {
        const int n = static_cast<int>(i + 1);
        for (Label k = 1; k <= n; ++k) grid.cells.push_back({n, k, decs[i].class_of(k)});
    }
    return grid;
}

MembershipGrid membership_grid(int n_max) { return membership_grid(decompose_range(n_max)); }

std::vector<BandRow> band_report(const std::vector<Decomposition>& decs) {
    std::vector<BandRow> rows;
    for (std::size_t i = 0; i < decs.size(); ++i) {
        const int n = static_cast<int>(i + 1);
        const Decomposition& dec = decs[i];
        BandRow row{n, dec.a.size(), 0, 0, 0, 0, {}};
        for (Label k : dec.a) {
            if (3 * k <= n) ++row.a_lo_count;
            if (3 * k > n && 2 * k < n) ++row.a_mid_count;
        }
        for (Label k = 1; k <= n; ++k) {
            if (2 * k >= n && 3 * k <= 2 * n) {
                ++row.mid_width;
                if (dec.in_d(k)) ++row.d_mid_count;
            }
            if (2 * k > n && k < n && is_prime(k)) row.upper_primes.push_back({k, dec.class_of(k)});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<BandRow> band_report(int n_max) { return band_report(decompose_range(n_max)); }

BandSummary summarize_bands(const std::vector<BandRow>& rows) {
    BandSummary s;
    s.n_max = rows.empty() ? 0 : rows.back().n;
    for (const BandRow& r : rows) {
        if (r.a_mid_count != 0) {
            s.a_gap_holds = false;
            s.a_gap_violations.push_back(r.n);
        }
        s.a_total += r.a_size;
        s.a_at_most_third += r.a_lo_count;
    }
    return s;
}

std::vector<LemoineRow> lemoine_rows(const std::vector<Decomposition>& decs, int n_from, int n_to) {
    if (n_from < 1 || n_from > n_to || static_cast<std::size_t>(n_to) > decs.size())
        throw DomainError("lemoine range must satisfy 1 <= from <= to <= computed range");
    std::vector<LemoineRow> rows;
    for (int n = n_from; n <= n_to; ++n) {
        LemoineRow row{n, std::nullopt};
        for (Label k : decs[static_cast<std::size_t>(n - 1)].d)
            if (k % 2 == 0) {
                row.even_witness = k;
                break;
            }
        rows.push_back(row);
    }
    return rows;
}

std::vector<LemoineRow> lemoine_check(int n_from, int n_to) {
    if (n_from < 1 || n_from > n_to) throw DomainError("lemoine range must satisfy 1 <= from <= to");
    return lemoine_rows(decompose_range(n_to), n_from, n_to);
}

std::vector<PrimeViolation> large_prime_violations(const std::vector<Decomposition>& decs) {
    std::vector<PrimeViolation> out;
    for (std::size_t i = 0; i < decs.size(); ++i) {
        const int n = static_cast<int>(i + 1);
        std::vector<Label> primes;
        for (Label p = n / 2 + 1; p < n; ++p)
            if (is_prime(p)) primes.push_back(p);
        if (primes.size() < 2) continue;
        for (Label p : primes) {
            const VertexClass cls = decs[i].class_of(p);
            if (cls != VertexClass::D) out.push_back({n, p, cls});
        }
    }
    return out;
}

std::vector<PrimeViolation> large_prime_check(int n_max) {
    if (n_max < 3) throw DomainError("large prime check needs n_max >= 3");
    return large_prime_violations(decompose_range(n_max));
}

std::optional<int> one_in_a_threshold(const std::vector<Decomposition>& decs) {
    std::optional<int> from;
    for (std::size_t i = decs.size(); i-- > 0;) {
        if (decs[i].class_of(1) != VertexClass::A) break;
        from = static_cast<int>(i + 1);
    }
    return from;
}

std::optional<int> one_in_a_threshold(int n_max) { return one_in_a_threshold(decompose_range(n_max)); }

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "n,d_size,a_size,c_size\n";
    for (const auto& r : rows) os << r.n << ',' << r.d_size << ',' << r.a_size << ',' << r.c_size << '\n';
    return os.str();
}

std::string membership_csv(const MembershipGrid& grid) {
    std::ostringstream os;
    os << "n,k,class\n";
    for (const auto& c : grid.cells) os << c.n << ',' << c.k << ',' << class_letter(c.cls) << '\n';
    return os.str();
}

std::string bands_csv(const std::vector<BandRow>& rows) {
    std::ostringstream os;
    os << "n,a_lo_count,a_mid_count,d_mid_density_num,d_mid_density_den,primes_upper_half_class\n";
    for (const auto& r : rows) {
        os << r.n << ',' << r.a_lo_count << ',' << r.a_mid_count << ',' << r.d_mid_count << ',' << r.mid_width << ',';
        for (std::size_t i = 0; i < r.upper_primes.size(); ++i)
            os << (i ? " " : "") << r.upper_primes[i].p << ':' << class_letter(r.upper_primes[i].cls);
        os << '\n';
    }
    return os.str();
}

std::string lemoine_csv(const std::vector<LemoineRow>& rows) {
    std::ostringstream os;
    os << "n,even_witness\n";
    for (const auto& r : rows) {
        os << r.n << ',';
        if (r.even_witness) os << *r.even_witness;
        os << '\n';
    }
    return os.str();
}

namespace {

std::filesystem::path write_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << body;
    return path;
}

}  // namespace

AnalysisOutput write_analysis(const std::filesystem::path& dir, int n_max) {
    const std::vector<Decomposition> decs = decompose_range(n_max);
    std::filesystem::create_directories(dir);
    AnalysisOutput out;
    const auto bands = band_report(decs);
    out.files.push_back(write_file(dir / "sweep.csv", sweep_csv(sweep_rows(decs))));
    out.files.push_back(write_file(dir / "membership.csv", membership_csv(membership_grid(decs))));
    out.files.push_back(write_file(dir / "bands.csv", bands_csv(bands)));
    out.files.push_back(write_file(dir / "lemoine.csv", lemoine_csv(lemoine_rows(decs, 1, n_max))));
    out.bands = summarize_bands(bands);
    out.one_in_a_from = one_in_a_threshold(decs);
    return out;
}

}  // namespace jg
