#include "dilworth/extremal.hpp"

#include <algorithm>
#include <bit>

#include "dilworth/errors.hpp"
#include "dilworth/families.hpp"

namespace dilworth {

SetPair SetPair::from_sequence(const Sequence& seq) {
    SetPair p;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const int elem = static_cast<int>(i) + 1;
        switch (seq[i]) {
            case 0: break;
            case 1: p.a.push_back(elem); break;
            case 2: p.b.push_back(elem); break;
            default: throw InvalidInput("set-pair sequences are ternary; got letter " + std::to_string(seq[i]));
        }
    }
    return p;
}

Sequence SetPair::to_sequence(int t) const {
    Sequence seq(static_cast<std::size_t>(t), 0);
    auto place = [&](const std::vector<int>& s, int letter) {
        for (int e : s) {
            if (e < 1 || e > t) {
                throw InvalidInput("element " + std::to_string(e) + " outside 1.." + std::to_string(t));
            }
            auto& slot = seq[static_cast<std::size_t>(e - 1)];
            if (slot != 0) {
                throw InvalidInput("element " + std::to_string(e) + " lies in both A and B");
            }
            slot = letter;
        }
    };
    place(a, 1);
    place(b, 2);
    return seq;
}

std::vector<std::vector<std::uint32_t>> antichain_cover(int t) {
    if (t < 0 || t > 20) {
        throw InvalidInput("antichain cover supports 0 <= t <= 20");
    }
    std::vector<std::vector<std::uint32_t>> levels(static_cast<std::size_t>(t + 1));
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << t); ++s) {
        levels[static_cast<std::size_t>(std::popcount(s))].push_back(s);
    }
    return levels;
}

bool verify_antichain_cover(int t, const std::vector<std::vector<std::uint32_t>>& cover) {
    const std::uint32_t total = std::uint32_t{1} << t;
    std::vector<bool> seen(total, false);
    for (const auto& cls : cover) {
        for (std::size_t i = 0; i < cls.size(); ++i) {
            if (cls[i] >= total) {
                return false;
            }
            seen[cls[i]] = true;
            for (std::size_t j = 0; j < cls.size(); ++j) {
                if (i != j && (cls[i] & cls[j]) == cls[i]) {
                    return false;
                }
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Coloring antichain_coloring(int t) {
    const PowerIndex index(2, t);
    Coloring c;
    c.k = t + 1;
    Sequence seq;
    for (std::uint64_t x = 0; x < index.size(); ++x) {
        index.decode_into(x, seq);
        c.colors.push_back(static_cast<int>(std::count(seq.begin(), seq.end(), 1)));
    }
    return c;
}

namespace {

bool meets(const std::vector<int>& x, const std::vector<int>& y) {
    for (int e : x) {
        if (std::find(y.begin(), y.end(), e) != y.end()) {
            return true;
        }
    }
    return false;
}

long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace

bool is_cross_intersecting(const std::vector<SetPair>& pairs) {
    for (const auto& p : pairs) {
        if (meets(p.a, p.b)) {
            throw InvalidInput("set pair has overlapping A and B");
        }
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            if (i != j && !meets(pairs[i].a, pairs[j].b)) {
                return false;
            }
        }
    }
    return true;
}

Rational bollobas_sum(const std::vector<SetPair>& pairs) {
    Rational sum(0);
    for (const auto& p : pairs) {
        const int sa = static_cast<int>(p.a.size());
        const int sb = static_cast<int>(p.b.size());
        sum += Rational(1, binom(sa + sb, sa));
    }
    return sum;
}

std::vector<std::vector<SetPair>> families_of(int t, const Coloring& coloring) {
    const PowerIndex index(3, t);
    if (coloring.colors.size() != index.size()) {
        throw MalformedCertificate("coloring size does not match 3^t");
    }
    std::vector<std::vector<SetPair>> fams;
    for (const auto& cls : coloring.classes()) {
        std::vector<SetPair> fam;
        for (int v : cls) {
            fam.push_back(SetPair::from_sequence(index.decode(static_cast<std::uint64_t>(v))));
        }
        fams.push_back(std::move(fam));
    }
    return fams;
}

BollobasReport bollobas_cover_bounds(int t, const Budget& budget, std::uint64_t exact_limit) {
    if (t < 0) {
        throw InvalidInput("t must be nonnegative");
    }
    const Digraph f = generate({FamilyKind::bollobas, 3});
    BollobasReport rep;
    rep.t = t;
    rep.lower = std::uint64_t{1} << t;
    const std::uint64_t tp1 = static_cast<std::uint64_t>(t + 1);
    rep.constructive_cap = tp1 * tp1 * tp1 * rep.lower;

    const CoverResult cover = dichromatic_number(f);
    const Coloring constructive = constructive_power_coloring(f, cover.certificate, t);
    rep.constructive = constructive.k;
    const Digraph p = and_power(f, t);
    rep.constructive_proper = static_cast<bool>(verify_certificate(p, constructive));

    const Coloring* best = &constructive;
    if (PowerIndex(3, t).size() <= exact_limit) {
        rep.solved = chromatic_number(p, budget);
        rep.solver_ran = true;
        if (rep.solved.optimal) {
            rep.exact = rep.solved.value;
        }
        if (rep.solved.certificate.k <= constructive.k) {
            best = &rep.solved.certificate;
        }
    }
    rep.families = families_of(t, *best);
    for (const auto& fam : rep.families) {
        if (!is_cross_intersecting(fam)) {
            rep.families_cross_intersecting = false;
        }
        rep.max_bollobas_sum = std::max(rep.max_bollobas_sum, bollobas_sum(fam));
    }
    return rep;
}

}  // namespace dilworth
