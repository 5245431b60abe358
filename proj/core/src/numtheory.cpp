#include "primword/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "primword/errors.hpp"

namespace primword {

namespace {
constexpr std::uint32_t kSieveLimit = 1'000'000;
}

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kSieveLimit + 1, false);
        std::vector<std::uint32_t> ps;
        for (std::uint32_t i = 2; i <= kSieveLimit; ++i) {
            if (composite[i]) continue;
            ps.push_back(i);
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= kSieveLimit; j += i)
                composite[j] = true;
        }
        return ps;
    }();
    return primes;
}

std::uint64_t Factorization::value() const {
    std::uint64_t v = 1;
    for (auto [p, e] : factors)
        for (int i = 0; i < e; ++i) v *= p;
    return v;
}

Factorization factorize(std::uint64_t v) {
    if (v == 0) throw DomainError("cannot factorize 0");
    if (v > kFactorizationLimit)
        throw DomainError("factorization input exceeds supported limit (10^12)");
    Factorization f;
    for (std::uint32_t p : small_primes()) {
        if (static_cast<std::uint64_t>(p) * p > v) break;
        if (v % p == 0) {
            int e = 0;
            while (v % p == 0) {
                v /= p;
                ++e;
            }
            f.factors.emplace_back(p, e);
        }
    }
    if (v > 1) f.factors.emplace_back(v, 1);  // leftover is prime: no factor <= sqrt remains
    return f;
}

int mobius(std::uint64_t n) {
    if (n == 0) throw DomainError("mobius undefined at 0");
    Factorization f = factorize(n);
    for (auto [p, e] : f.factors)
        if (e >= 2) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::vector<std::uint64_t> divisors(std::uint64_t l) {
    Factorization f = factorize(l);
    std::vector<std::uint64_t> ds{1};
    for (auto [p, e] : f.factors) {
        std::size_t existing = ds.size();
        std::uint64_t pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < existing; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

LambdaSets lambda_sets(std::uint64_t l) {
    LambdaSets sets;
    for (std::uint64_t d : divisors(l)) {
        if (d < 4 || d % 3 == 0) continue;
        sets.all.push_back(d);
        (d % 2 == 0 ? sets.even : sets.odd).push_back(d);
    }
    return sets;
}

ThreeSplit split_pow3(std::uint64_t l) {
    if (l == 0) throw DomainError("length must be positive");
    ThreeSplit s{0, l};
    while (s.l1 % 3 == 0) {
        s.l1 /= 3;
        ++s.m;
    }
    return s;
}

SixSplit split_pow3_pow2(std::uint64_t l) {
    ThreeSplit t = split_pow3(l);
    SixSplit s{t.m, 0, t.l1};
    while (s.l1 % 2 == 0) {
        s.l1 /= 2;
        ++s.s;
    }
    return s;
}

std::uint64_t AtomSet::product() const {
    std::uint64_t v = 1;
    for (std::uint64_t a : atoms) v *= a;
    return v;
}

GammaFamily gamma_sets(std::uint64_t l) {
    SixSplit split = split_pow3_pow2(l);
    GammaFamily family;
    family.gamma1 = split.s >= 2;

    std::vector<std::uint64_t> atoms{3};
    if (family.gamma1) atoms.push_back(4);
    for (auto [p, e] : factorize(split.l1).factors) atoms.push_back(p);
    std::sort(atoms.begin(), atoms.end());

    for (std::uint32_t mask = 1; mask < (1u << atoms.size()); ++mask) {
        AtomSet s;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (mask & (1u << i)) s.atoms.push_back(atoms[i]);
        if (s.atoms.size() == 1 && s.atoms[0] == 3) continue;
        family.sets.push_back(std::move(s));
    }
    std::sort(family.sets.begin(), family.sets.end(), [](const AtomSet& a, const AtomSet& b) {
        if (a.atoms.size() != b.atoms.size()) return a.atoms.size() < b.atoms.size();
        return a.atoms < b.atoms;
    });
    return family;
}

BigInt count_primitive(std::uint64_t n, std::uint64_t l) {
    if (n < 2) throw DomainError("alphabet size must be >= 2");
    if (l < 1) throw DomainError("length must be positive");
    BigInt total;
    for (std::uint64_t d : divisors(l)) {
        int mu = mobius(d);
        if (mu == 0) continue;
        BigInt term = BigInt::pow(n, l / d);
        total += mu > 0 ? term : -term;
    }
    if (total.is_negative()) throw std::logic_error("primitive count came out negative");
    return total;
}

namespace {
std::uint64_t checked_prime_power(std::uint64_t r, int m) {
    std::uint64_t v = 1;
    for (int i = 0; i < m; ++i) {
        if (v > kFactorizationLimit) throw DomainError("prime power too large");
        v *= r;
    }
    return v;
}

void check_split_args(std::uint64_t r, std::uint64_t l) {
    Factorization f = factorize(r);
    if (f.factors.size() != 1 || f.factors[0].second != 1)
        throw DomainError("r must be prime");
    if (l == 0) throw DomainError("length must be positive");
    if (std::gcd(l, r) != 1) throw DomainError("l must be coprime to r");
}
}  // namespace

BigInt count_primitive_split(std::uint64_t n, std::uint64_t r, int m, std::uint64_t l) {
    if (n < 2) throw DomainError("alphabet size must be >= 2");
    if (m < 0) throw DomainError("m must be nonnegative");
    check_split_args(r, l);
    std::uint64_t rm = checked_prime_power(r, m);
    BigInt total;
    for (std::uint64_t d : divisors(l)) {
        int mu = mobius(d);
        if (mu == 0) continue;
        BigInt term = BigInt::pow(n, rm * r * (l / d)) - BigInt::pow(n, rm * (l / d));
        total += mu > 0 ? term : -term;
    }
    if (total.is_negative()) throw std::logic_error("primitive count came out negative");
    return total;
}

BigInt primitive_sum_telescoped(std::uint64_t n, std::uint64_t r, int m, std::uint64_t l) {
    if (n < 2) throw DomainError("alphabet size must be >= 2");
    if (m < 0) throw DomainError("m must be nonnegative");
    check_split_args(r, l);
    std::uint64_t rm = checked_prime_power(r, m);
    return BigInt::pow(n, rm * r * l) - BigInt::pow(n, rm * l);
}

PrimePair primes_and_gaps(std::uint64_t k) {
    if (k == 0) throw DomainError("prime index starts at 1");
    const auto& ps = small_primes();
    if (k + 1 > ps.size()) throw DomainError("prime index beyond sieve range");
    PrimePair pair;
    pair.pk = ps[k - 1];
    pair.pk_next = ps[k];
    pair.gap = pair.pk_next - pair.pk;
    return pair;
}

}  // namespace primword
