#include "oca/divisors.hpp"

#include <algorithm>
#include <sstream>

namespace oca {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Brent's cycle variant of Pollard rho with a deterministic increment
// schedule, so repeated runs factor identically.
u64 pollard_brent(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
        const u64 m = 128;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (u64 k = 0; k < r && g == 1; k += m) {
                ys = y;
                u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = gcd_u64(q, n);
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (mulmod(ys, ys, n) + c) % n;
                g = gcd_u64(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
    }
}

void factor_u64(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

}  // namespace

mpz_class Factorization::value() const {
    mpz_class n = 1;
    for (const auto& [p, e] : factors) {
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        n *= pe;
    }
    return n;
}

bool Factorization::is_odd() const {
    for (const auto& [p, e] : factors)
        if (p == 2) return false;
    return true;
}

std::string Factorization::str() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : factors) {
        if (!first) os << "*";
        first = false;
        os << p.get_str();
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

Factorization Factorization::parse(const std::string& s) {
    Factorization f;
    if (s == "1") return f;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '*')) {
        if (part.empty()) throw DomainError("bad factorization string: " + s);
        size_t caret = part.find('^');
        mpz_class p(caret == std::string::npos ? part : part.substr(0, caret), 10);
        unsigned e = 1;
        if (caret != std::string::npos) e = static_cast<unsigned>(std::stoul(part.substr(caret + 1)));
        if (p < 2 || e < 1) throw DomainError("bad factor in: " + s);
        if (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
            throw DomainError("composite base in factorization string: " + p.get_str());
        if (!f.factors.empty() && f.factors.back().first >= p)
            throw DomainError("factorization primes must strictly increase: " + s);
        f.factors.emplace_back(p, e);
    }
    return f;
}

std::string Factorization::json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [p, e] : factors) {
        if (!first) os << ",";
        first = false;
        os << "[\"" << p.get_str() << "\"," << e << "]";
    }
    os << "]";
    return os.str();
}

Factorization Factorization::parse_json(const std::string& s) {
    // Minimal parser for the [[\"p\",e],...] shape emitted by json().
    Factorization f;
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i >= s.size() || s[i] != '[') throw DomainError("bad factorization json");
    ++i;
    skip_ws();
    if (i < s.size() && s[i] == ']') return f;
    while (true) {
        skip_ws();
        if (i >= s.size() || s[i] != '[') throw DomainError("bad factorization json");
        ++i;
        skip_ws();
        std::string pstr;
        if (i < s.size() && s[i] == '"') {
            size_t end = s.find('"', i + 1);
            if (end == std::string::npos) throw DomainError("bad factorization json");
            pstr = s.substr(i + 1, end - i - 1);
            i = end + 1;
        } else {
            size_t start = i;
            while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
            pstr = s.substr(start, i - start);
        }
        skip_ws();
        if (i >= s.size() || s[i] != ',') throw DomainError("bad factorization json");
        ++i;
        skip_ws();
        size_t start = i;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
        unsigned e = static_cast<unsigned>(std::stoul(s.substr(start, i - start)));
        skip_ws();
        if (i >= s.size() || s[i] != ']') throw DomainError("bad factorization json");
        ++i;
        f.factors.emplace_back(mpz_class(pstr, 10), e);
        skip_ws();
        if (i < s.size() && s[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    skip_ws();
    if (i >= s.size() || s[i] != ']') throw DomainError("bad factorization json");
    return f;
}

Factorization factorize(const mpz_class& n) {
    if (n < 1) throw DomainError("factorize requires n >= 1");
    Factorization f;
    if (n == 1) return f;
    mpz_class rem = n;
    // Trial division by small primes first.
    for (u64 p = 2; p < 100000 && rem > 1; p = (p == 2 ? 3 : p + 2)) {
        if (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
                mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
                ++e;
            }
            f.factors.emplace_back(mpz_class(static_cast<unsigned long>(p)), e);
        }
        mpz_class psq = mpz_class(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p);
        if (psq > rem) break;
    }
    if (rem > 1) {
        if (mpz_probab_prime_p(rem.get_mpz_t(), 40)) {
            f.factors.emplace_back(rem, 1);
        } else if (rem.fits_ulong_p() || mpz_sizeinbase(rem.get_mpz_t(), 2) <= 64) {
            std::vector<u64> ps;
            factor_u64(mpz_get_ui(rem.get_mpz_t()), ps);
            std::sort(ps.begin(), ps.end());
            for (size_t i = 0; i < ps.size();) {
                size_t j = i;
                while (j < ps.size() && ps[j] == ps[i]) ++j;
                f.factors.emplace_back(mpz_class(static_cast<unsigned long>(ps[i])),
                                       static_cast<unsigned>(j - i));
                i = j;
            }
        } else {
            // Large inputs beyond 64 bits arrive in factored form.
            throw DomainError("factorize: cofactor too large for desk-scale factoring; "
                              "supply the input in factored form");
        }
    }
    std::sort(f.factors.begin(), f.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return f;
}

mpz_class sigma(const Factorization& f) {
    mpz_class s = 1;
    for (const auto& [p, e] : f.factors) {
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e + 1);
        s *= (pe - 1) / (p - 1);
    }
    return s;
}

mpz_class sigma_mod(const Factorization& f, unsigned long k, unsigned long l) {
    mpz_class kk(static_cast<unsigned long>(k)), ll(static_cast<unsigned long>(l)), g;
    mpz_gcd(g.get_mpz_t(), kk.get_mpz_t(), ll.get_mpz_t());
    if (k == 0 || g != 1) throw DomainError("sigma_mod requires gcd(l, k) = 1");
    mpz_class s = 1;
    for (const auto& [p, e] : f.factors) {
        if (mpz_class(p % k) != mpz_class(static_cast<unsigned long>(l % k))) continue;
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e + 1);
        s *= (pe - 1) / (p - 1);
    }
    return s;
}

mpz_class euler_phi(const Factorization& f) {
    mpz_class r = 1;
    for (const auto& [p, e] : f.factors) {
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e - 1);
        r *= pe * (p - 1);
    }
    return r;
}

bool is_squarefree(const Factorization& f) {
    for (const auto& [p, e] : f.factors)
        if (e > 1) return false;
    return true;
}

Expr f_ratio_expr(const Factorization& f) {
    mpz_class n = f.value();
    if (n < 3) throw DomainError("f(n) requires n >= 3");
    mpq_class sigma_over_n(sigma(f), n);
    sigma_over_n.canonicalize();
    return lit(sigma_over_n) / log_e(log_e(lit(n)));
}

Interval f_ratio(const Factorization& f, const mpq_class& tol) {
    return eval(f_ratio_expr(f), tol);
}

Interval f_mod(const Factorization& f, unsigned long k, unsigned long l, const mpq_class& tol) {
    mpz_class n = f.value();
    if (n < 2) throw DomainError("f_mod requires n >= 2 (log n must be positive)");
    mpz_class phi_k = euler_phi(factorize(mpz_class(static_cast<unsigned long>(k))));
    mpq_class s_over_n(sigma_mod(f, k, l), n);
    s_over_n.canonicalize();
    if (!phi_k.fits_ulong_p()) throw DomainError("f_mod: modulus too large");
    mpq_class inv_phi(1, phi_k.get_ui());
    inv_phi.canonicalize();
    // sigma_{k,l}(n)/n / (log(phi(k) log n))^{1/phi(k)}
    Expr denom = pow_e(log_e(lit(phi_k) * log_e(lit(n))), inv_phi);
    return eval(lit(s_over_n) / denom, tol);
}

}  // namespace oca
