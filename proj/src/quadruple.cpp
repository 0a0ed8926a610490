#include "cgd/quadruple.hpp"

#include <string>

namespace cgd {

std::ostream& operator<<(std::ostream& os, const Quadruple& q) {
    os << "(N=" << q.N << ", sigma=" << q.sigma << ", delta=" << q.delta << ", I={";
    for (std::size_t k = 0; k < q.I.size(); ++k) os << (k ? "," : "") << q.I[k];
    return os << "})";
}

bool is_admissible_triple(int N, Int sigma, Int delta, Prime p) {
    if (N < 0 || sigma < 0 || delta < 0) return false;
    const Int pN = ipow(p.value(), N);
    const Int limit = pN * p.value() - pN;
    if (sigma >= limit || delta >= limit) return false;
    const Int q = p.value();
    for (int i = 0; i < N; ++i, sigma /= q, delta /= q) {
        if (sigma % q + delta % q > q - 1) return false;
    }
    return sigma % q + delta % q < q - 1;
}

bool is_admissible_quadruple(const Quadruple& q, Prime p) {
    if (!is_admissible_triple(q.N, q.sigma, q.delta, p)) return false;
    const Digits sd = digits(q.sigma, p);
    IndexSet allowed;
    for (std::size_t i = 0; i < sd.digits.size(); ++i) {
        if (sd.digits[i] != 0 && static_cast<int>(i) != q.N) allowed.push_back(static_cast<int>(i));
    }
    return is_subset_of(q.I, allowed);
}

void check_pair(Int r, Int t) {
    check_weight(r, "r");
    check_weight(t, "t");
    if (t > r) throw DomainError("need r >= t, got r = " + std::to_string(r) + ", t = " + std::to_string(t));
    if ((r - t) % 2 != 0) throw DomainError("need r - t even, got r = " + std::to_string(r) + ", t = " + std::to_string(t));
}

namespace {

// digit part of is_admissible_triple, bounds already known
bool digits_admissible(int N, Int sigma, Int delta, Int q) {
    for (int i = 0; i < N; ++i, sigma /= q, delta /= q) {
        if (sigma % q + delta % q > q - 1) return false;
    }
    return sigma % q + delta % q < q - 1;
}

Int floor_mod(Int a, Int m) {
    const Int v = a % m;
    return v < 0 ? v + m : v;
}

}  // namespace

bool is_quadruple_for(const Quadruple& q, Int r, Int t, Prime p) {
    check_pair(r, t);
    if (!is_admissible_quadruple(q, p)) return false;
    const Int pN = ipow(p.value(), q.N);
    const Int s = (pN - 1) + q.sigma;
    if (t != s - 2 * sigma_subset(digits(q.sigma, p), q.I)) return false;
    const Int mod = 2 * pN * p.value();
    return floor_mod(r - s - 2 * q.delta, mod) == 0;
}

std::vector<Quadruple> solve_by_enumeration(Int r, Int t, Prime p) {
    check_pair(r, t);
    const Int q = p.value();

    // N runs up to the larger of: the least N with p^N - 1 > 3r + 3, and the least
    // N with p^{N-1} - 1 > r. The top two values then both have p^N - 1 > r, which
    // no solution can reach (its s = (p^N - 1) + sigma is a summand weight <= r).
    int n_max = 0;
    while (ipow(q, n_max) - 1 <= 3 * r + 3) ++n_max;
    int n_guard = 1;
    while (ipow(q, n_guard - 1) - 1 <= r) ++n_guard;
    n_max = std::max(n_max, n_guard);

    std::vector<Quadruple> found;
    for (int N = 0; N <= n_max; ++N) {
        const Int pN = ipow(q, N);
        const Int pN1 = pN * q;
        const Int limit = pN1 - pN;
        const Int mod = 2 * pN1;
        // (1) needs (p^N - 1) + sigma - t even and 0 <= that half <= sigma,
        // i.e. sigma >= |p^N - 1 - t| with matching parity
        Int start = pN - 1 - t;
        if (start < 0) start = -start;
        // (2): 2 delta = r - (p^N - 1) - sigma  (mod 2 p^{N+1}); the residue keeps
        // its parity as sigma steps by 2, and stepping down by 2 is tracked directly
        Int rhs = floor_mod(r - (pN - 1) - start, mod);
        if (rhs % 2 != 0) continue;
        for (Int sigma = start; sigma < limit; sigma += 2, rhs = rhs >= 2 ? rhs - 2 : rhs - 2 + mod) {
            // (1): sigma_I = ((p^N - 1) + sigma - t) / 2
            const Int target = ((pN - 1) + sigma - t) / 2;
            const Int delta = rhs / 2;  // rhs < 2 p^{N+1}
            if (delta >= limit) continue;
            if (!digits_admissible(N, sigma, delta, q)) continue;

            // sigma_I = target: each digit of target is 0 or the matching digit of sigma,
            // and position N is never in I.
            IndexSet I;
            bool ok = true;
            Int sv = sigma;
            Int tv = target;
            for (int i = 0; sv > 0 || tv > 0; ++i, sv /= q, tv /= q) {
                const Int sd = sv % q;
                const Int td = tv % q;
                if (td == 0) continue;
                if (td != sd || i == N) {
                    ok = false;
                    break;
                }
                I.push_back(i);
            }
            if (!ok) continue;

            if (N >= n_max - 1) {
                throw InvariantViolation("solve_by_enumeration: solution in guard band for r = " +
                                         std::to_string(r) + ", t = " + std::to_string(t));
            }
            found.push_back({N, sigma, delta, std::move(I)});
        }
    }
    return found;
}

namespace {

Quadruple recurse(Int r, Int t, Int q) {
    // Base case: t + u_0 < p - 1 gives (0, t, u_0, {}).
    const Int u0 = ((r - t) / 2) % q;
    if (t + u0 < q - 1) return {0, t, u0, {}};

    const Int r0 = r % q;
    const Int t0 = t % q;
    const Int rp = r / q;
    const Int tp = t / q;

    bool zero_in_I = false;
    Int sigma0 = 0;
    Int delta0 = 0;
    Int r_next = rp;
    Int t_next = tp;

    if (t0 == q - 1) {
        // sigma_0 = 0, so 0 is not in I; delta_0 from 2 delta_0 = r + 1 (mod p).
        sigma0 = 0;
        if (r0 == q - 1) {
            delta0 = 0;
        } else if (r0 % 2 == 1) {
            delta0 = (r0 + 1) / 2;
            r_next = rp - 1;
        } else {
            delta0 = (q + 1 + r0) / 2;
            r_next = rp - 2;
        }
    } else if ((r0 - t0) % 2 == 0) {
        if (r0 >= t0) {
            sigma0 = t0 + 1;
            delta0 = (r0 - t0) / 2;
            r_next = rp - 1;
            t_next = tp - 1;
        } else {
            zero_in_I = true;
            sigma0 = q - 1 - t0;
            delta0 = (r0 + t0) / 2 + 1;
            r_next = rp - 2;
        }
    } else if (r0 + t0 <= q - 4) {
        sigma0 = t0 + 1;
        delta0 = (r0 - t0 + q) / 2;
        r_next = rp - 2;
        t_next = tp - 1;
    } else {
        zero_in_I = true;
        sigma0 = q - 1 - t0;
        delta0 = (r0 + t0 + 2 - q) / 2;
        r_next = rp - 1;
    }

    if (t_next < 0 || r_next < t_next || (r_next - t_next) % 2 != 0) {
        throw InvariantViolation("solve_recursive: reduced pair (" + std::to_string(r_next) + ", " +
                                 std::to_string(t_next) + ") is invalid for (" + std::to_string(r) + ", " +
                                 std::to_string(t) + ")");
    }
    const Quadruple inner = recurse(r_next, t_next, q);
    Quadruple out{inner.N + 1, sigma0 + q * inner.sigma, delta0 + q * inner.delta, {}};
    if (zero_in_I) out.I.push_back(0);
    for (int i : inner.I) out.I.push_back(i + 1);
    return out;
}

}  // namespace

Quadruple solve_recursive(Int r, Int t, Prime p) {
    check_pair(r, t);
    if (!p.is_odd()) throw UnsupportedRecursion("solve_recursive: the digit recursion covers odd p only");
    Quadruple q = recurse(r, t, p.value());
    if (!is_quadruple_for(q, r, t, p)) {
        throw InvariantViolation("solve_recursive: result fails the quadruple conditions");
    }
    return q;
}

Quadruple solve(Int r, Int t, Prime p) {
    if (p.is_odd()) return solve_recursive(r, t, p);
    std::vector<Quadruple> all = solve_by_enumeration(r, t, p);
    if (all.size() != 1) {
        throw InvariantViolation("solve: expected exactly one quadruple for (" + std::to_string(r) + ", " +
                                 std::to_string(t) + "), found " + std::to_string(all.size()));
    }
    return std::move(all.front());
}

}  // namespace cgd
