#include "oca/primes.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <mutex>

#include "oca/expr.hpp"

namespace oca {

namespace {

constexpr char kMagic[8] = {'O', 'C', 'A', 'S', 'I', 'E', 'V', 'E'};

std::optional<std::filesystem::path> g_cache_dir;
std::mutex g_cache_mutex;

std::filesystem::path cache_file(std::uint64_t limit) {
    return *g_cache_dir / ("sieve_" + std::to_string(limit) + ".bits");
}

// 1 bit per odd integer: bit i <-> 2i+1. Bit set = prime. 1 is not prime.
std::vector<std::uint8_t> build_odd_bitset(std::uint64_t limit) {
    const std::uint64_t n_odd = (limit + 1) / 2;  // odds 1,3,...,<=limit
    std::vector<std::uint8_t> bits((n_odd + 7) / 8, 0xFF);
    auto clear_bit = [&](std::uint64_t i) { bits[i >> 3] &= ~(std::uint8_t(1) << (i & 7)); };
    auto test_bit = [&](std::uint64_t i) { return (bits[i >> 3] >> (i & 7)) & 1; };
    clear_bit(0);  // 1

    // Base primes up to sqrt(limit) by a direct small sieve.
    std::uint64_t root = 1;
    while ((root + 1) * (root + 1) <= limit) ++root;
    std::vector<std::uint64_t> base;
    {
        std::vector<bool> small(root + 1, true);
        for (std::uint64_t i = 3; i * i <= root; i += 2)
            if (small[i])
                for (std::uint64_t j = i * i; j <= root; j += 2 * i) small[j] = false;
        for (std::uint64_t i = 3; i <= root; i += 2)
            if (small[i]) base.push_back(i);
    }

    // Segmented marking over blocks of odd indices.
    const std::uint64_t block = 1u << 20;
    for (std::uint64_t lo = 0; lo < n_odd; lo += block) {
        std::uint64_t hi = std::min(lo + block, n_odd);
        std::uint64_t lo_val = 2 * lo + 1, hi_val = 2 * (hi - 1) + 1;
        for (std::uint64_t p : base) {
            if (p * p > hi_val) break;
            std::uint64_t start = std::max(p * p, ((lo_val + p - 1) / p) * p);
            if (start % 2 == 0) start += p;
            for (std::uint64_t v = start; v <= hi_val; v += 2 * p) clear_bit((v - 1) / 2);
        }
    }
    (void)test_bit;
    return bits;
}

std::vector<std::uint8_t> load_or_build(std::uint64_t limit) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    if (g_cache_dir) {
        std::ifstream in(cache_file(limit), std::ios::binary);
        if (in) {
            char magic[8];
            std::uint64_t stored = 0;
            in.read(magic, 8);
            in.read(reinterpret_cast<char*>(&stored), 8);
            if (in && std::memcmp(magic, kMagic, 8) == 0 && stored == limit) {
                std::vector<std::uint8_t> bits(((limit + 1) / 2 + 7) / 8);
                in.read(reinterpret_cast<char*>(bits.data()), static_cast<std::streamsize>(bits.size()));
                if (in) return bits;
            }
        }
    }
    auto bits = build_odd_bitset(limit);
    if (g_cache_dir) {
        std::error_code ec;
        std::filesystem::create_directories(*g_cache_dir, ec);
        std::ofstream out(cache_file(limit), std::ios::binary | std::ios::trunc);
        if (out) {
            out.write(kMagic, 8);
            out.write(reinterpret_cast<const char*>(&limit), 8);
            out.write(reinterpret_cast<const char*>(bits.data()), static_cast<std::streamsize>(bits.size()));
        }
    }
    return bits;
}

}  // namespace

void set_sieve_cache_dir(std::optional<std::filesystem::path> dir) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache_dir = std::move(dir);
}

std::optional<std::filesystem::path> sieve_cache_dir() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_cache_dir;
}

PrimeTable sieve(std::uint64_t limit) {
    if (limit < 2) throw DomainError("sieve limit must be >= 2");
    auto bits = load_or_build(limit);
    PrimeTable t;
    t.limit = limit;
    t.primes.push_back(2);
    const std::uint64_t n_odd = (limit + 1) / 2;
    for (std::uint64_t i = 1; i < n_odd; ++i)
        if ((bits[i >> 3] >> (i & 7)) & 1) t.primes.push_back(2 * i + 1);
    return t;
}

std::size_t PrimeTable::count_below(double x) const {
    if (x < 2) return 0;
    auto it = std::upper_bound(primes.begin(), primes.end(),
                               static_cast<std::uint64_t>(x));
    // Guard against double truncation at exact prime values.
    while (it != primes.end() && static_cast<double>(*it) <= x) ++it;
    return static_cast<std::size_t>(it - primes.begin());
}

std::size_t PrimeTable::count_below(const mpq_class& x) const {
    std::size_t lo = 0, hi = primes.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (mpq_class(primes[mid]) <= x)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

bool PrimeTable::contains(std::uint64_t p) const {
    return std::binary_search(primes.begin(), primes.end(), p);
}

namespace {

// Sum of log p over the first `count` table primes, skipping 2 when
// odd_only; both endpoints directed.
Interval sum_logs(const PrimeTable& table, std::size_t count, bool odd_only, mpfr_prec_t prec) {
    mpfr_t lp_lo, lp_hi, acc_lo, acc_hi;
    mpfr_init2(lp_lo, prec);
    mpfr_init2(lp_hi, prec);
    mpfr_init2(acc_lo, prec);
    mpfr_init2(acc_hi, prec);
    mpfr_set_zero(acc_lo, 1);
    mpfr_set_zero(acc_hi, 1);
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t p = table.primes[i];
        if (odd_only && p == 2) continue;
        mpfr_set_ui(lp_lo, p, MPFR_RNDD);
        mpfr_log(lp_lo, lp_lo, MPFR_RNDD);
        mpfr_set_ui(lp_hi, p, MPFR_RNDU);
        mpfr_log(lp_hi, lp_hi, MPFR_RNDU);
        mpfr_add(acc_lo, acc_lo, lp_lo, MPFR_RNDD);
        mpfr_add(acc_hi, acc_hi, lp_hi, MPFR_RNDU);
    }
    Interval out = Interval::from_endpoints(acc_lo, acc_hi, prec);
    mpfr_clears(lp_lo, lp_hi, acc_lo, acc_hi, static_cast<mpfr_ptr>(nullptr));
    return out;
}

// Primes <= the given mpfr endpoint.
std::size_t count_below_mpfr(const PrimeTable& table, const mpfr_t x) {
    std::size_t lo = 0, hi = table.primes.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (mpfr_cmp_ui(x, table.primes[mid]) >= 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

Interval theta(const PrimeTable& table, const mpq_class& x, bool odd_only, const mpq_class& tol) {
    if (x < 2) throw DomainError("theta requires x >= 2");
    if (x > mpq_class(table.limit)) throw DomainError("theta argument exceeds sieve limit");
    std::size_t count = table.count_below(x);
    mpfr_prec_t ceiling = default_precision_ceiling();
    for (mpfr_prec_t prec = 64;; prec *= 2) {
        Interval s = sum_logs(table, count, odd_only, std::min(prec, ceiling));
        if (s.width_leq(tol)) return s;
        if (prec >= ceiling)
            throw PrecisionExhausted("theta: tolerance not reached at precision ceiling");
    }
}

Interval a_func(const PrimeTable& table, const mpq_class& x, const mpq_class& tol) {
    if (x < 3) throw DomainError("a_func requires x >= 3");
    if (x > mpq_class(table.limit)) throw DomainError("a_func argument exceeds sieve limit");
    std::size_t c0 = table.count_below(x);
    mpfr_prec_t ceiling = default_precision_ceiling();
    for (mpfr_prec_t prec = 64;; prec *= 2) {
        mpfr_prec_t p = std::min(prec, ceiling);
        Interval xi = Interval::from_mpq(x, p);
        // x^{2/3} / 2^{1/3} and x^{1/2} / 2^{1/4}
        Interval two = Interval::exact(2, p);
        Interval u1 = pow_q(xi, mpq_class(2, 3)) / pow_q(two, mpq_class(1, 3));
        Interval u2 = sqrt(xi) / pow_q(two, mpq_class(1, 4));
        std::size_t c1l = count_below_mpfr(table, u1.lo());
        std::size_t c1h = count_below_mpfr(table, u1.hi());
        std::size_t c2l = count_below_mpfr(table, u2.lo());
        std::size_t c2h = count_below_mpfr(table, u2.hi());
        bool settled = c1l == c1h && c2l == c2h;
        if (settled) {
            Interval s = sum_logs(table, c0, true, p) + sum_logs(table, c1l, true, p) +
                         sum_logs(table, c2l, true, p);
            if (s.width_leq(tol)) return s;
        }
        if (prec >= ceiling) {
            if (!settled)
                throw PrecisionExhausted("a_func: inner argument straddles a prime at ceiling");
            throw PrecisionExhausted("a_func: tolerance not reached at precision ceiling");
        }
    }
}

}  // namespace oca
