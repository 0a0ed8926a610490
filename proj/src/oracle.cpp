#include "cgd/oracle.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>
#include <sstream>
#include <utility>

#include "cgd/charring.hpp"
#include "cgd/decomp.hpp"
#include "cgd/fp_module.hpp"
#include "cgd/quadruple.hpp"
#include "cgd/tilting.hpp"

namespace cgd {

bool MultMatrix::is_lower_unitriangular() const {
    for (Int r = 0; r <= n_; ++r) {
        if (at(r, r) != 1) return false;
        for (Int s = r + 1; s <= n_; ++s) {
            if (at(r, s) != 0) return false;
        }
    }
    return true;
}

MultMatrix operator*(const MultMatrix& a, const MultMatrix& b) {
    if (a.n_ != b.n_) throw DomainError("MultMatrix product: size mismatch");
    MultMatrix c(a.n_);
    for (Int i = 0; i <= a.n_; ++i) {
        for (Int k = 0; k <= a.n_; ++k) {
            const Int x = a.at(i, k);
            if (x == 0) continue;
            for (Int j = 0; j <= a.n_; ++j) c.at(i, j) += x * b.at(k, j);
        }
    }
    return c;
}

MultMatrix build_A(Int n, Prime p) {
    check_weight(n, "n");
    MultMatrix a(n);
    for (Int r = 0; r <= n; ++r) {
        for (Int s = 0; s <= r; ++s) a.at(r, s) = y_has_tilting(r, s, p) ? 1 : 0;
    }
    return a;
}

MultMatrix build_B(Int n, Prime p) {
    check_weight(n, "n");
    MultMatrix b(n);
    for (Int r = 0; r <= n; ++r) {
        for (const Section& sec : tilting_profile(r, p).sections) b.at(r, sec.weight) = 1;
    }
    return b;
}

MultMatrix build_C(Int n, Prime /*p*/) {
    check_weight(n, "n");
    MultMatrix c(n);
    for (Int r = 0; r <= n; ++r) {
        for (Int t = r; t >= 0; t -= 2) c.at(r, t) = 1;
    }
    return c;
}

MultMatrix recover_A(Int n, Prime p) {
    const MultMatrix b = build_B(n, p);
    const MultMatrix c = build_C(n, p);
    if (!b.is_lower_unitriangular()) throw InvariantViolation("recover_A: B is not lower unitriangular");
    MultMatrix x(n);
    // row r of X B = C: x_rt = c_rt - sum_{s > t} x_rs b_st, since b_tt = 1
    for (Int r = 0; r <= n; ++r) {
        for (Int t = n; t >= 0; --t) {
            Int v = c.at(r, t);
            for (Int s = t + 1; s <= n; ++s) v -= x.at(r, s) * b.at(s, t);
            if (v != 0 && v != 1) {
                throw InvariantViolation("recover_A: entry (" + std::to_string(r) + ", " + std::to_string(t) +
                                         ") = " + std::to_string(v));
            }
            x.at(r, t) = v;
        }
    }
    return x;
}

bool Report::all_passed() const {
    for (const CheckResult& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

std::string Report::to_text() const {
    std::ostringstream os;
    std::size_t ok = 0;
    for (const CheckResult& c : checks) {
        os << (c.passed ? "PASS" : "FAIL") << " " << c.name << " cases=" << c.cases;
        if (!c.passed) os << " counterexample: " << c.counterexample;
        os << "\n";
        ok += c.passed ? 1 : 0;
    }
    os << "verify p=" << p << " bound=" << bound << ": " << ok << "/" << checks.size() << " passed\n";
    return os.str();
}

namespace {

/// Accumulates cases for one check and keeps the first failure.
class Check {
public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()>& describe) {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.counterexample = describe();
        }
    }

    CheckResult done() && { return std::move(result_); }

private:
    CheckResult result_;
};

std::string at(std::initializer_list<std::pair<const char*, Int>> kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv) {
        os << (first ? "" : " ") << k << "=" << v;
        first = false;
    }
    return os.str();
}

using Family = std::function<std::vector<CheckResult>(Prime, Int)>;

std::vector<CheckResult> basep_family(Prime p, Int bound) {
    Check round_trip("basep.digits_round_trip");
    Check window("basep.standard_form_window");
    const Int q = p.value();
    for (Int n = 0; n <= bound * bound; ++n) {
        const Digits d = digits(n, p);
        Int v = 0;
        Int w = 1;
        bool in_range = true;
        for (int dg : d.digits) {
            v += dg * w;
            w *= q;
            in_range = in_range && dg >= 0 && dg < q;
        }
        round_trip.expect(v == n && in_range, [&] { return at({{"n", n}}); });

        const StandardForm sf = standard_form(n, p);
        const Int pN = sf.p_to_N();
        window.expect(pN - 1 <= n && n < pN * q - 1 && n == pN - 1 + sf.sigma.value && sf.sigma.value < pN * q - pN,
                      [&] { return at({{"r", n}}); });
    }

    Check order("basep.subset_order_matches_max_rule");
    Check total("basep.subset_order_total");
    Check distinct("basep.distinct_subset_sums");
    for (Int m = 0; m <= bound; ++m) {
        const StandardForm sf = standard_form(m, p);
        const std::vector<IndexSet> subs = all_subsets(support(m, p).indices);
        std::set<Int> sums;
        for (const IndexSet& I : subs) {
            sums.insert(sigma_subset(sf.sigma, I));
            for (const IndexSet& J : subs) {
                const bool a = subset_leq(I, J, sf.sigma);
                const bool b = subset_leq(J, I, sf.sigma);
                order.expect(a == subset_leq_by_max(I, J), [&] { return at({{"m", m}}); });
                total.expect((a || b) && (!(a && b) || I == J), [&] { return at({{"m", m}}); });
            }
        }
        distinct.expect(sums.size() == subs.size(), [&] { return at({{"m", m}}); });
    }
    std::vector<CheckResult> out;
    out.push_back(std::move(round_trip).done());
    out.push_back(std::move(window).done());
    out.push_back(std::move(order).done());
    out.push_back(std::move(total).done());
    out.push_back(std::move(distinct).done());
    return out;
}

std::vector<CheckResult> charring_family(Prime /*p*/, Int bound) {
    Check cg("charring.clebsch_gordan");
    Check trunc("charring.tensor_is_truncated_y");
    for (Int r = 0; r <= bound; ++r) {
        for (Int s = 0; s <= r && r + s <= bound; ++s) {
            const ChiExpansion e = chi_expand(chi(r) * chi(s));
            ChiExpansion expected;
            for (Int i = 0; i <= s; ++i) expected.mults[r + s - 2 * i] = 1;
            cg.expect(e == expected, [&] { return at({{"r", r}, {"s", s}}); });

            const auto [inside, outside] = truncate_expansion(chi_expand(y_char(r + s)), SaturatedSet::below(r - s));
            trunc.expect(outside == e, [&] { return at({{"r", r}, {"s", s}}); });
        }
    }
    Check y("charring.y_char_is_tensor");
    for (Int r = 0; r <= bound; ++r) {
        const Int m = r / 2;
        y.expect(y_char(r) == chi(r - m) * chi(m), [&] { return at({{"r", r}}); });
    }
    std::vector<CheckResult> out;
    out.push_back(std::move(cg).done());
    out.push_back(std::move(trunc).done());
    out.push_back(std::move(y).done());
    return out;
}

std::vector<CheckResult> tilting_family(Prime p, Int bound) {
    Check sections("tilting.char_matches_multiplicities");
    Check count("tilting.section_count");
    Check boundary("tilting.truncation_boundary");
    Check split("tilting.truncation_plus_discarded");
    for (Int r = 0; r <= bound; ++r) {
        const Character tc = tilting_char(r, p);
        Character from_mults;
        for (Int s = 0; s <= r; ++s) {
            if (tilting_nabla_mult(r, s, p) == 1) from_mults += chi(s);
        }
        sections.expect(tc == from_mults && tc.coeff(r) == 1 && tc.max_weight() == r,
                        [&] { return at({{"r", r}}); });
        const SupportSet sup = support(r, p);
        count.expect(tilting_profile(r, p).sections.size() == (std::size_t{1} << sup.indices.size()),
                     [&] { return at({{"r", r}}); });
        boundary.expect(truncated_tilting_char(r, {}, p) == chi(r) && truncated_tilting_char(r, sup.indices, p) == tc,
                        [&] { return at({{"m", r}}); });
        const StandardForm sf = standard_form(r, p);
        for (const IndexSet& I : all_subsets(sup.indices)) {
            const OPiSplit sp = o_pi_tilting_sections(r, SaturatedSet::below(r - 2 * sigma_subset(sf.sigma, I)), p);
            split.expect(sp.kept == I && truncated_tilting_char(r, I, p) + sp.discarded == tc,
                         [&] { return at({{"m", r}}); });
        }
    }
    std::vector<CheckResult> out;
    out.push_back(std::move(sections).done());
    out.push_back(std::move(count).done());
    out.push_back(std::move(boundary).done());
    out.push_back(std::move(split).done());
    return out;
}

std::vector<CheckResult> quadruple_family(Prime p, Int bound) {
    Check unique("quadruple.exists_unique");
    Check determined("quadruple.sigma_I_determined");
    Check recursion(p.is_odd() ? "quadruple.recursion_matches_enumeration"
                               : "quadruple.recursion_matches_enumeration (p=2: not applicable)");
    const Int q = p.value();
    for (Int r = 0; r <= bound; ++r) {
        for (Int t = r % 2; t <= r; t += 2) {
            const std::vector<Quadruple> all = solve_by_enumeration(r, t, p);
            unique.expect(all.size() == 1 && is_quadruple_for(all.front(), r, t, p),
                          [&] { return at({{"r", r}, {"t", t}, {"found", static_cast<Int>(all.size())}}); });
            if (all.size() != 1) continue;
            const Quadruple& qd = all.front();
            const Int pN = ipow(q, qd.N);
            determined.expect(2 * sigma_subset(digits(qd.sigma, p), qd.I) == (pN - 1) + qd.sigma - t,
                              [&] { return at({{"r", r}, {"t", t}}); });
            if (p.is_odd()) {
                recursion.expect(solve_recursive(r, t, p) == qd, [&] { return at({{"r", r}, {"t", t}}); });
            }
        }
    }
    std::vector<CheckResult> out;
    out.push_back(std::move(unique).done());
    out.push_back(std::move(determined).done());
    out.push_back(std::move(recursion).done());
    return out;
}

std::vector<CheckResult> decomp_family(Prime p, Int bound) {
    Check ychar("decomp.y_character");
    Check closure("decomp.y_contains_top");
    Check triple("decomp.triple_form_matches_digit_test");
    for (Int r = 0; r <= bound; ++r) {
        Character sum;
        const std::vector<Int> ss = decompose_y(r, p);
        for (Int s : ss) sum += tilting_char(s, p);
        ychar.expect(sum == y_char(r), [&] { return at({{"r", r}}); });
        closure.expect(!ss.empty() && ss.front() == r, [&] { return at({{"r", r}}); });
        for (Int s = 0; s <= bound; ++s) {
            triple.expect(y_has_tilting(r, s, p) == y_has_tilting_by_triple(r, s, p),
                          [&] { return at({{"r", r}, {"s", s}}); });
        }
    }

    Check complete("decomp.tensor_character");
    Check mult_one("decomp.multiplicity_one");
    Check floor("decomp.section_floor");
    Check nabla("decomp.nabla_summand_closed_form");
    for (Int r = 0; r <= bound; ++r) {
        for (Int s = 0; s <= r && r + s <= bound; ++s) {
            const Decomposition d = decompose_tensor(r, s, p);
            complete.expect(d.character() == chi(r) * chi(s), [&] { return at({{"r", r}, {"s", s}}); });
            std::set<std::pair<Int, IndexSet>> seen;
            bool floor_ok = true;
            std::set<Int> nabla_tops;
            for (const Summand& sm : d.summands) {
                seen.emplace(sm.m, sm.I);
                for (Int w : sm.sections) floor_ok = floor_ok && w >= r - s;
                if (sm.I.empty()) nabla_tops.insert(sm.m);
            }
            mult_one.expect(seen.size() == d.summands.size(), [&] { return at({{"r", r}, {"s", s}}); });
            floor.expect(floor_ok, [&] { return at({{"r", r}, {"s", s}}); });
            for (Int t = 0; t <= r + s; ++t) {
                nabla.expect(nabla_is_summand(t, r, s, p) == nabla_tops.contains(t),
                             [&] { return at({{"t", t}, {"r", r}, {"s", s}}); });
            }
        }
    }
    std::vector<CheckResult> out;
    out.push_back(std::move(ychar).done());
    out.push_back(std::move(closure).done());
    out.push_back(std::move(triple).done());
    out.push_back(std::move(complete).done());
    out.push_back(std::move(mult_one).done());
    out.push_back(std::move(floor).done());
    out.push_back(std::move(nabla).done());
    return out;
}

std::vector<CheckResult> matrix_family(Prime p, Int bound) {
    const MultMatrix a = build_A(bound, p);
    const MultMatrix b = build_B(bound, p);
    const MultMatrix c = build_C(bound, p);
    Check identity("oracle.AB_equals_C");
    const MultMatrix ab = a * b;
    for (Int r = 0; r <= bound; ++r) {
        for (Int t = 0; t <= bound; ++t) {
            identity.expect(ab.at(r, t) == c.at(r, t), [&] { return at({{"r", r}, {"t", t}}); });
        }
    }
    Check recovered("oracle.recover_A_equals_A");
    try {
        const MultMatrix x = recover_A(bound, p);
        for (Int r = 0; r <= bound; ++r) {
            for (Int s = 0; s <= bound; ++s) {
                recovered.expect(x.at(r, s) == a.at(r, s), [&] { return at({{"r", r}, {"s", s}}); });
            }
        }
    } catch (const InvariantViolation& e) {
        recovered.expect(false, [&] { return std::string(e.what()); });
    }
    Check sparse("oracle.unique_contributor");
    for (Int r = 0; r <= bound; ++r) {
        for (Int t = 0; t <= bound; ++t) {
            if (c.at(r, t) != 1) continue;
            Int contributors = 0;
            for (Int s = 0; s <= bound; ++s) contributors += a.at(r, s) * b.at(s, t);
            sparse.expect(contributors == 1, [&] { return at({{"r", r}, {"t", t}}); });
        }
    }
    std::vector<CheckResult> out;
    out.push_back(std::move(identity).done());
    out.push_back(std::move(recovered).done());
    out.push_back(std::move(sparse).done());
    return out;
}

std::vector<CheckResult> explicit_family(Prime p, Int bound) {
    const Int cap = std::min(bound, kExplicitSweepCap);
    if (p.value() > fp::kMaxExplicitPrime) {
        return {CheckResult{"explicit.short_exact_sequence (p > 97: not applicable)", true, 0, {}}};
    }
    Check ses("explicit.short_exact_sequence (r+s<=" + std::to_string(cap) + ")");
    for (Int r = 1; r <= cap; ++r) {
        for (Int s = 1; s <= r && r + s <= cap; ++s) {
            const fp::SesReport rep = fp::verify_ses(r, s, p);
            ses.expect(rep.passed(), [&] { return rep.to_text(); });
        }
    }
    std::vector<CheckResult> out;
    out.push_back(std::move(ses).done());
    return out;
}

}  // namespace

Report verify_all(Prime p, Int bound) {
    check_weight(bound, "bound");
    const std::vector<std::pair<const char*, Family>> families = {
        {"basep", basep_family},         {"charring", charring_family}, {"tilting", tilting_family},
        {"quadruple", quadruple_family}, {"decomp", decomp_family},     {"oracle", matrix_family},
        {"explicit", explicit_family},
    };
    std::vector<std::future<std::vector<CheckResult>>> running;
    running.reserve(families.size());
    for (const auto& [name, fn] : families) {
        running.push_back(std::async(std::launch::async, [fn, p, bound, family = std::string(name)] {
            try {
                return fn(p, bound);
            } catch (const std::exception& e) {
                return std::vector<CheckResult>{{family + ".exception", false, 0, e.what()}};
            }
        }));
    }
    Report report{p.value(), bound, {}};
    for (auto& f : running) {
        for (CheckResult& c : f.get()) report.checks.push_back(std::move(c));
    }
    return report;
}

}  // namespace cgd
