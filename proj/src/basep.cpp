#include "cgd/basep.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace cgd {

bool is_prime(Int n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Prime::Prime(Int p) : p_(p) {
    if (p < 2 || p >= kMaxPrime || !is_prime(p)) {
        throw InvalidPrime("p = " + std::to_string(p) + " is not a supported prime (need prime 2 <= p < 2^20)");
    }
}

void check_weight(Int w, const char* what) {
    if (w < 0 || w >= kMaxWeight) {
        throw DomainError(std::string(what) + " = " + std::to_string(w) + " must satisfy 0 <= w < 2^40");
    }
}

Int ipow(Int p, int e) {
    Int out = 1;
    for (int i = 0; i < e; ++i) {
        if (out > std::numeric_limits<Int>::max() / p) throw DomainError("integer power overflows 64 bits");
        out *= p;
    }
    return out;
}

Digits digits(Int n, Prime p) {
    if (n < 0) throw DomainError("digits: negative integer");
    Digits d{p, n, {}};
    for (Int v = n; v > 0; v /= p.value()) {
        d.digits.push_back(static_cast<int>(v % p.value()));
    }
    return d;
}

StandardForm standard_form(Int r, Prime p) {
    check_weight(r, "r");
    const Int q = p.value();
    int N = 0;
    Int pN = 1;  // p^N
    // p^{N+1} - 1 <= r  means N is still too small
    while (pN * q - 1 <= r) {
        pN *= q;
        ++N;
    }
    return StandardForm{p, r, N, digits(r - (pN - 1), p)};
}

Int sigma_subset(const Digits& sigma, const IndexSet& I) {
    Int total = 0;
    for (int i : I) {
        if (i < 0 || static_cast<std::size_t>(i) >= sigma.digits.size()) continue;
        total += ipow(sigma.p.value(), i) * sigma.digits[static_cast<std::size_t>(i)];
    }
    return total;
}

SupportSet support(Int m, Prime p) {
    const StandardForm sf = standard_form(m, p);
    SupportSet s{m, {}};
    for (int i = 0; i < sf.N; ++i) {
        if (sf.sigma.digit(static_cast<std::size_t>(i)) != 0) s.indices.push_back(i);
    }
    return s;
}

bool subset_leq(const IndexSet& I, const IndexSet& J, const Digits& sigma) {
    return sigma_subset(sigma, I) <= sigma_subset(sigma, J);
}

namespace {

int max_of_difference(const IndexSet& A, const IndexSet& B) {
    int best = -1;  // stands for max of the empty set
    for (int a : A) {
        if (!std::binary_search(B.begin(), B.end(), a)) best = std::max(best, a);
    }
    return best;
}

}  // namespace

bool subset_leq_by_max(const IndexSet& I, const IndexSet& J) {
    return max_of_difference(I, J) <= max_of_difference(J, I);
}

std::vector<IndexSet> all_subsets(const IndexSet& indices) {
    if (indices.size() >= 63) throw DomainError("all_subsets: too many indices");
    const std::uint64_t count = std::uint64_t{1} << indices.size();
    std::vector<IndexSet> out;
    out.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        IndexSet s;
        for (std::size_t k = 0; k < indices.size(); ++k) {
            if (mask >> k & 1U) s.push_back(indices[k]);
        }
        out.push_back(std::move(s));
    }
    return out;
}

bool is_subset_of(const IndexSet& I, const IndexSet& super) {
    if (!std::is_sorted(I.begin(), I.end())) return false;
    if (std::adjacent_find(I.begin(), I.end()) != I.end()) return false;
    return std::includes(super.begin(), super.end(), I.begin(), I.end());
}

}  // namespace cgd
