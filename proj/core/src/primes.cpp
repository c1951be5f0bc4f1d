#include "primeconst/primes.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>

namespace primeconst {

namespace {

constexpr std::array<std::uint32_t, 54> kSmallPrimes = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
    47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107,
    109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
    191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251};

// Strong-pseudoprime bases 2..41 are deterministic below this bound
// (Sorenson & Webster).
const BigInt& deterministic_limit() {
    static const BigInt limit("3317044064679887385961981");
    return limit;
}

constexpr std::array<std::uint32_t, 13> kDeterministicBases = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

}  // namespace

namespace detail {

bool miller_rabin_strong(const BigInt& n, const BigInt& base) {
    BigInt a = base % n;
    if (a == 0) {
        return true;
    }
    const BigInt n_minus_1 = n - 1;
    const unsigned s = static_cast<unsigned>(lsb(n_minus_1));
    const BigInt d = n_minus_1 >> s;

    BigInt x = powm(a, d, n);
    if (x == 1 || x == n_minus_1) {
        return true;
    }
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n_minus_1) {
            return true;
        }
    }
    return false;
}

int jacobi(BigInt a, BigInt n) {
    if (n <= 0 || (n & 1) == 0) {
        throw std::domain_error("jacobi: modulus must be positive and odd");
    }
    a %= n;
    if (a < 0) {
        a += n;
    }
    int result = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            const unsigned r = static_cast<unsigned>(n % 8);
            if (r == 3 || r == 5) {
                result = -result;
            }
        }
        a.swap(n);
        if ((a & 3) == 3 && (n & 3) == 3) {
            result = -result;
        }
        a %= n;
    }
    return n == 1 ? result : 0;
}

bool is_perfect_square(const BigInt& n) {
    if (n < 0) {
        return false;
    }
    const BigInt root = sqrt(n);
    return root * root == n;
}

bool strong_lucas_selfridge(const BigInt& n) {
    // Selfridge parameter selection: first D in 5, -7, 9, -11, ... with
    // Jacobi symbol (D|n) = -1; P = 1, Q = (1 - D)/4.  The caller must
    // exclude even n and perfect squares (no such D exists for squares).
    BigInt d_abs = 5;
    int sign = 1;
    BigInt D;
    while (true) {
        D = sign > 0 ? d_abs : BigInt(-d_abs);
        const int j = jacobi(D, n);
        if (j == -1) {
            break;
        }
        if (j == 0 && d_abs < n) {
            return false;  // shares a factor with n
        }
        d_abs += 2;
        sign = -sign;
        if (d_abs > 1000000) {
            throw std::logic_error("strong_lucas_selfridge: no discriminant found");
        }
    }
    const BigInt Q = (1 - D) / 4;

    auto reduce = [&n](BigInt v) {
        v %= n;
        if (v < 0) {
            v += n;
        }
        return v;
    };
    // v/2 mod n for odd n; expects v already reduced.
    auto halve = [&n](BigInt v) {
        if ((v & 1) != 0) {
            v += n;
        }
        return v >> 1;
    };

    const BigInt delta = n + 1;
    const unsigned s = static_cast<unsigned>(lsb(delta));
    const BigInt q = delta >> s;

    // Binary ladder over the bits of q: U_1 = 1, V_1 = P = 1.
    BigInt U = 1;
    BigInt V = 1;
    BigInt Qk = reduce(Q);
    for (unsigned i = static_cast<unsigned>(msb(q)); i-- > 0;) {
        U = reduce(U * V);              // U_2k = U_k V_k
        V = reduce(V * V - 2 * Qk);     // V_2k = V_k^2 - 2 Q^k
        Qk = reduce(Qk * Qk);
        if (bit_test(q, i)) {
            const BigInt u_next = halve(reduce(U + V));      // (P U + V)/2
            const BigInt v_next = halve(reduce(D * U + V));  // (D U + P V)/2
            U = u_next;
            V = v_next;
            Qk = reduce(Qk * Q);
        }
    }

    if (U == 0 || V == 0) {
        return true;
    }
    for (unsigned r = 1; r < s; ++r) {
        V = reduce(V * V - 2 * Qk);
        Qk = reduce(Qk * Qk);
        if (V == 0) {
            return true;
        }
    }
    return false;
}

}  // namespace detail

const char* to_string(PrimalityVerdict v) {
    switch (v) {
        case PrimalityVerdict::Composite:
            return "composite";
        case PrimalityVerdict::Prime:
            return "prime";
        case PrimalityVerdict::ProbablePrime:
            return "probable-prime";
    }
    return "unknown";
}

PrimalityVerdict is_prime(const BigInt& x) {
    if (x < 2) {
        return PrimalityVerdict::Composite;
    }
    for (const std::uint32_t p : kSmallPrimes) {
        if (x == p) {
            return PrimalityVerdict::Prime;
        }
        if (x % p == 0) {
            return PrimalityVerdict::Composite;
        }
    }
    // No factor <= 251, so anything below 251^2 reaching here is prime, and
    // the deterministic base set settles everything below 3.3e24.
    if (x < deterministic_limit()) {
        for (const std::uint32_t base : kDeterministicBases) {
            if (!detail::miller_rabin_strong(x, base)) {
                return PrimalityVerdict::Composite;
            }
        }
        return PrimalityVerdict::Prime;
    }
    if (!detail::miller_rabin_strong(x, 2)) {
        return PrimalityVerdict::Composite;
    }
    if (detail::is_perfect_square(x)) {
        return PrimalityVerdict::Composite;
    }
    if (!detail::strong_lucas_selfridge(x)) {
        return PrimalityVerdict::Composite;
    }
    return PrimalityVerdict::ProbablePrime;
}

BigInt next_prime_after(const BigInt& x) {
    if (x < 0) {
        throw std::domain_error("next_prime_after: negative input");
    }
    if (x < 2) {
        return 2;
    }
    if (x < 3) {
        return 3;
    }
    // All primes > 3 are 6k +/- 1; align upward then alternate steps 2, 4.
    BigInt c = x + 1;
    unsigned r = static_cast<unsigned>(c % 6);
    while (r != 1 && r != 5) {
        ++c;
        r = (r + 1) % 6;
    }
    while (true) {
        if (is_prime(c) != PrimalityVerdict::Composite) {
            return c;
        }
        c += (r == 5) ? 2 : 4;
        r = (r == 5) ? 1 : 5;
    }
}

BigInt prev_prime_before(const BigInt& x) {
    if (x <= 2) {
        throw std::domain_error("prev_prime_before: no prime below the input");
    }
    if (x == 3) {
        return 2;
    }
    if (x <= 5) {
        return 3;
    }
    BigInt c = x - 1;
    unsigned r = static_cast<unsigned>(c % 6);
    while (r != 1 && r != 5) {
        --c;
        r = (r + 5) % 6;
    }
    while (c >= 5) {
        if (is_prime(c) != PrimalityVerdict::Composite) {
            return c;
        }
        c -= (r == 5) ? 4 : 2;
        r = (r == 5) ? 1 : 5;
    }
    return 3;
}

std::uint64_t PrimeTable::nth_prime(std::uint64_t n) const {
    if (n == 0) {
        throw std::invalid_argument("nth_prime: indices are 1-based");
    }
    ensure_count(n);
    std::shared_lock read(mutex_);
    return primes_[n - 1];
}

std::uint64_t PrimeTable::limit_index() const {
    std::shared_lock read(mutex_);
    return primes_.size();
}

BigInt PrimeTable::primorial(std::uint64_t n, std::uint64_t m) const {
    if (n == 0) {
        throw std::invalid_argument("primorial: indices are 1-based");
    }
    if (n > m + 1) {
        throw std::invalid_argument("primorial: start index past end + 1");
    }
    BigInt product = 1;
    if (n > m) {
        return product;
    }
    ensure_count(m);
    std::shared_lock read(mutex_);
    for (std::uint64_t i = n; i <= m; ++i) {
        product *= primes_[i - 1];
    }
    return product;
}

std::vector<std::uint64_t> PrimeTable::bertrand_check(std::uint64_t k) const {
    if (k < 2) {
        throw std::invalid_argument("bertrand_check: k must be >= 2");
    }
    ensure_count(k + 1);
    std::shared_lock read(mutex_);
    std::vector<std::uint64_t> violations;
    for (std::uint64_t n = 2; n <= k; ++n) {
        const std::uint64_t p = primes_[n - 1];
        const std::uint64_t next = primes_[n];
        if (!(p + 1 < next && next < 2 * p)) {
            violations.push_back(n);
        }
    }
    return violations;
}

bool PrimeTable::load_cache(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) {
        return false;
    }
    constexpr const char* kPrefix = "limit=";
    if (header.rfind(kPrefix, 0) != 0) {
        return false;
    }
    std::uint64_t limit = 0;
    try {
        limit = std::stoull(header.substr(6));
    } catch (const std::exception&) {
        return false;
    }

    std::vector<std::uint64_t> loaded;
    std::uint64_t value = 0;
    std::uint64_t prev = 0;
    while (in >> value) {
        if (value <= prev || value > limit) {
            return false;
        }
        loaded.push_back(value);
        prev = value;
    }
    if (!in.eof() || loaded.empty() || loaded.front() != 2) {
        return false;
    }

    std::unique_lock write(mutex_);
    if (loaded.size() > primes_.size()) {
        primes_ = std::move(loaded);
        sieved_to_ = limit;
    }
    return true;
}

void PrimeTable::save_cache(std::ostream& out) const {
    std::shared_lock read(mutex_);
    out << "limit=" << sieved_to_ << "\n";
    for (const std::uint64_t p : primes_) {
        out << p << "\n";
    }
}

void PrimeTable::ensure_count(std::uint64_t n) const {
    {
        std::shared_lock read(mutex_);
        if (primes_.size() >= n) {
            return;
        }
    }
    std::unique_lock write(mutex_);
    while (primes_.size() < n) {
        grow_locked();
    }
}

void PrimeTable::grow_locked() const {
    const std::uint64_t new_limit = sieved_to_ == 0 ? 4096 : sieved_to_ * 2;

    if (sieved_to_ == 0) {
        std::vector<std::uint8_t> composite(new_limit + 1, 0);
        for (std::uint64_t i = 2; i * i <= new_limit; ++i) {
            if (!composite[i]) {
                for (std::uint64_t j = i * i; j <= new_limit; j += i) {
                    composite[j] = 1;
                }
            }
        }
        for (std::uint64_t i = 2; i <= new_limit; ++i) {
            if (!composite[i]) {
                primes_.push_back(i);
            }
        }
        sieved_to_ = new_limit;
        return;
    }

    // Base primes up to sqrt(new_limit) are already present: new_limit is
    // 2 * sieved_to_ and sieved_to_^2 >= new_limit.
    constexpr std::uint64_t kSegment = 1 << 16;
    const std::size_t base_count = primes_.size();
    std::uint64_t low = sieved_to_ + 1;
    std::vector<std::uint8_t> composite;
    while (low <= new_limit) {
        const std::uint64_t high = std::min(low + kSegment - 1, new_limit);
        composite.assign(high - low + 1, 0);
        for (std::size_t idx = 0; idx < base_count; ++idx) {
            const std::uint64_t p = primes_[idx];
            if (p * p > high) {
                break;
            }
            const std::uint64_t first = std::max(p * p, (low + p - 1) / p * p);
            for (std::uint64_t j = first; j <= high; j += p) {
                composite[j - low] = 1;
            }
        }
        for (std::uint64_t v = low; v <= high; ++v) {
            if (!composite[v - low]) {
                primes_.push_back(v);
            }
        }
        low = high + 1;
    }
    sieved_to_ = new_limit;
}

}  // namespace primeconst
