#include "primeq/ntheory.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace primeq::ntheory {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return uint64_t((unsigned __int128)a * b % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

uint64_t splitmix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Visit every prime <= x in increasing order.
template <class F>
void for_each_prime(const PrimeTable& t, uint64_t x, F f) {
    uint64_t last_word = x >> 6;
    for (uint64_t w = 0; w <= last_word; ++w) {
        uint64_t word = t.bits[w];
        if (w == last_word && (x & 63) != 63)
            word &= (uint64_t(1) << ((x & 63) + 1)) - 1;
        while (word) {
            int b = std::countr_zero(word);
            word &= word - 1;
            f((w << 6) | uint64_t(b));
        }
    }
}

constexpr uint64_t kSegmentBits = uint64_t(1) << 24;
constexpr uint64_t kCumBlock = uint64_t(1) << 16;

}  // namespace

PrimeTable sieve(uint64_t limit) {
    if (limit < 4 || limit > kSieveMaxLimit)
        throw std::out_of_range("sieve: limit must be in [4, 2^34]");
    PrimeTable t;
    t.limit = limit;
    uint64_t words = (limit + 63) / 64;
    t.bits.assign(words, 0xAAAAAAAAAAAAAAAAull);  // odd candidates prewired
    t.bits[0] = (t.bits[0] & ~uint64_t(2)) | uint64_t(4);  // drop 0,1; keep 2

    uint64_t root = uint64_t(std::sqrt(double(limit))) + 2;
    std::vector<char> small(root + 2, 1);
    small[0] = small[1] = 0;
    for (uint64_t p = 2; p * p <= root + 1; ++p)
        if (small[p])
            for (uint64_t m = p * p; m <= root + 1; m += p) small[m] = 0;
    std::vector<uint64_t> base;
    for (uint64_t p = 3; p <= root + 1; p += 2)
        if (small[p] && p * p < limit) base.push_back(p);

    // composite marking runs one fixed-size segment at a time
    for (uint64_t lo = 0; lo < limit; lo += kSegmentBits) {
        uint64_t hi = std::min(lo + kSegmentBits, limit);
        for (uint64_t p : base) {
            uint64_t start = p * p;
            if (start >= hi) break;
            if (start < lo) {
                uint64_t q = (lo + p - 1) / p;
                q |= 1;  // odd multiples only; evens were never set
                start = q * p;
            }
            for (uint64_t m = start; m < hi; m += 2 * p)
                t.bits[m >> 6] &= ~(uint64_t(1) << (m & 63));
        }
    }
    if (limit & 63) t.bits[words - 1] &= (uint64_t(1) << (limit & 63)) - 1;

    uint64_t blocks = (limit + kCumBlock - 1) / kCumBlock;
    t.cum.resize(blocks + 1);
    t.cum[0] = 0;
    uint64_t acc = 0;
    for (uint64_t b = 0; b < blocks; ++b) {
        uint64_t w1 = std::min(words, (b + 1) * (kCumBlock / 64));
        for (uint64_t w = b * (kCumBlock / 64); w < w1; ++w)
            acc += uint64_t(std::popcount(t.bits[w]));
        t.cum[b + 1] = acc;
    }
    return t;
}

MrDecomposition mr_decompose(uint64_t x) {
    if (x < 3 || x % 2 == 0)
        throw std::domain_error("mr_decompose: x must be odd and >= 3");
    uint64_t m = x - 1;
    int s = std::countr_zero(m);
    return {x, m >> s, s};
}

Verdict mr_witness_test(uint64_t x, uint64_t a) {
    if (x < 3 || x % 2 == 0)
        throw std::domain_error("mr_witness_test: x must be odd and >= 3");
    if (a < 1 || a >= x)
        throw std::domain_error("mr_witness_test: witness guard requires 1 <= a < x");
    MrDecomposition dec = mr_decompose(x);
    uint64_t v = powmod(a, dec.d, x);
    if (v == 1 || v == x - 1) return Verdict::probable_prime;
    for (int r = 1; r < dec.s; ++r) {
        v = mulmod(v, v, x);
        if (v == x - 1) return Verdict::probable_prime;
    }
    return Verdict::composite_proven;
}

WitnessSet WitnessSet::deterministic() {
    WitnessSet ws;
    ws.mode = Mode::deterministic;
    ws.witnesses = {2, 3, 5, 7, 11, 13, 17};
    ws.k = int(ws.witnesses.size());
    return ws;
}

WitnessSet WitnessSet::fixed(std::vector<uint64_t> list) {
    WitnessSet ws;
    ws.mode = Mode::deterministic;
    ws.witnesses = std::move(list);
    ws.k = int(ws.witnesses.size());
    return ws;
}

WitnessSet WitnessSet::probabilistic(int k, uint64_t seed) {
    if (k < 1) throw std::domain_error("WitnessSet: k must be >= 1");
    WitnessSet ws;
    ws.mode = Mode::probabilistic;
    ws.k = k;
    ws.seed = seed;
    return ws;
}

std::vector<uint64_t> WitnessSet::witnesses_for(uint64_t x) const {
    if (mode == Mode::deterministic) return witnesses;
    std::vector<uint64_t> out;
    out.reserve(size_t(k));
    uint64_t lo = 2;
    uint64_t hi = x >= 4 ? x - 2 : 2;
    uint64_t span = hi - lo + 1;
    uint64_t state = splitmix(seed ^ splitmix(x));
    for (int i = 0; i < k; ++i) {
        state = splitmix(state);
        out.push_back(lo + state % span);
    }
    return out;
}

bool is_prime(uint64_t x, const WitnessSet& ws) {
    if (x < 2) return false;
    if (x == 2) return true;
    if (x % 2 == 0) return false;
    for (uint64_t a : ws.witnesses_for(x)) {
        if (a >= x) continue;  // circuit guard: skip oversized witnesses
        if (mr_witness_test(x, a) == Verdict::composite_proven) return false;
    }
    return true;
}

bool is_prime(uint64_t x) {
    static const WitnessSet ws = WitnessSet::deterministic();
    return is_prime(x, ws);
}

uint64_t pi(const PrimeTable& t, uint64_t x) {
    if (x >= t.limit) throw std::out_of_range("pi: x must be below table limit");
    uint64_t b = x >> 16;
    uint64_t count = t.cum[b];
    uint64_t wx = x >> 6;
    for (uint64_t w = b << 10; w < wx; ++w)
        count += uint64_t(std::popcount(t.bits[w]));
    uint64_t mask = (x & 63) == 63 ? ~uint64_t(0)
                                   : (uint64_t(1) << ((x & 63) + 1)) - 1;
    count += uint64_t(std::popcount(t.bits[wx] & mask));
    return count;
}

uint64_t pi_ab(const PrimeTable& t, uint64_t a, uint64_t b, uint64_t x) {
    if (a == 0 || std::gcd(a, b) != 1)
        throw std::domain_error("pi_ab: a and b must be coprime");
    if (x >= t.limit) throw std::out_of_range("pi_ab: x must be below table limit");
    uint64_t count = 0;
    uint64_t target = b % a;
    for_each_prime(t, x, [&](uint64_t p) {
        if (p % a == target) ++count;
    });
    return count;
}

namespace {

// Pairs (p, p+2) with both members <= x; lookups never exceed x.
void twin_counts(const PrimeTable& t, uint64_t x, uint64_t& c1, uint64_t& c3) {
    c1 = c3 = 0;
    if (x < 5) return;
    for_each_prime(t, x - 2, [&](uint64_t p) {
        if (p < 3 || !t.is_prime(p + 2)) return;
        ((p & 3) == 1 ? c1 : c3) += 1;
    });
}

}  // namespace

uint64_t pi_twin(const PrimeTable& t, uint64_t x, TwinClass cls) {
    if (x + 2 >= t.limit)
        throw std::out_of_range("pi_twin: x + 2 must be below table limit");
    uint64_t c1 = 0, c3 = 0;
    twin_counts(t, x, c1, c3);
    switch (cls) {
        case TwinClass::c1: return c1;
        case TwinClass::c3: return c3;
        default: return c1 + c3;
    }
}

BiasReport chebyshev_bias(const PrimeTable& t, uint64_t x) {
    if (x >= t.limit)
        throw std::out_of_range("chebyshev_bias: x must be below table limit");
    BiasReport r;
    r.x = x;
    for_each_prime(t, x, [&](uint64_t p) {
        if ((p & 3) == 1) ++r.pi41;
        else if ((p & 3) == 3) ++r.pi43;
    });
    twin_counts(t, x, r.pi2_1, r.pi2_3);
    r.delta = int64_t(r.pi43) - int64_t(r.pi41);
    r.delta2 = int64_t(r.pi2_3) - int64_t(r.pi2_1);
    return r;
}

uint64_t euler_phi(uint64_t a) {
    if (a == 0) throw std::domain_error("euler_phi: a must be >= 1");
    uint64_t result = a, m = a;
    for (uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        result -= result / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// 15-point Kronrod rule with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

double inv_log(double t) { return 1.0 / std::log(t); }

void gk15(double a, double b, double& integral, double& error) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fc = inv_log(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        double dx = h * kXgk[i];
        double fs = inv_log(c - dx) + inv_log(c + dx);
        resk += kWgk[i] * fs;
        if (i % 2 == 1) resg += kWg[i / 2] * fs;
    }
    integral = resk * h;
    error = std::abs((resk - resg) * h);
}

}  // namespace

double li(double x) {
    if (!(x >= 2.0)) throw std::domain_error("li: x must be >= 2");
    if (x == 2.0) return 0.0;
    double whole, whole_err;
    gk15(2.0, x, whole, whole_err);
    double tol = 1e-13 * std::max(1.0, std::abs(whole));
    struct Seg { double a, b, val, err; int depth; };
    std::vector<Seg> stack{{2.0, x, whole, whole_err, 0}};
    double total = 0.0;
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        double local = tol * (s.b - s.a) / (x - 2.0);
        if (s.err <= local || s.depth >= 60) {
            total += s.val;
            continue;
        }
        double m = 0.5 * (s.a + s.b);
        Seg left{s.a, m, 0, 0, s.depth + 1}, right{m, s.b, 0, 0, s.depth + 1};
        gk15(left.a, left.b, left.val, left.err);
        gk15(right.a, right.b, right.val, right.err);
        stack.push_back(left);
        stack.push_back(right);
    }
    return total;
}

double twin_prime_constant() {
    static const double c2 = [] {
        PrimeTable t = sieve(uint64_t(1) << 24);
        long double prod = 1.0L;
        for_each_prime(t, t.limit - 1, [&](uint64_t p) {
            if (p < 3) return;
            long double q = (long double)(p - 1);
            prod *= 1.0L - 1.0L / (q * q);
        });
        return double(prod);
    }();
    return c2;
}

double hl_twin_estimate(double x) {
    double lx = std::log(x);
    return 2.0 * twin_prime_constant() * x / (lx * lx);
}

double rh_residual(const PrimeTable& t, uint64_t x) {
    uint64_t px = pi(t, x);
    double lx = li(double(x));
    return std::abs(double(px) - lx) / (std::sqrt(double(x)) * std::log(double(x)));
}

}  // namespace primeq::ntheory
