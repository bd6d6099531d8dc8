#include "hlab/classgroup.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace hlab {

Phase phase_reduce(i64 num, i64 den) {
    if (den <= 0) throw std::domain_error("phase_reduce: denominator must be positive");
    num = mod_norm(num, den);
    i64 g = std::gcd(num, den);
    if (g == 0) g = 1;
    return {num / g, den / g};
}

Phase phase_add(Phase a, Phase b) { return phase_reduce(a.num * b.den + b.num * a.den, a.den * b.den); }

Phase phase_mul_int(Phase a, i64 t) { return phase_reduce(a.num * mod_norm(t, a.den), a.den); }

std::vector<QuadForm> reduced_forms(i64 D) {
    std::vector<QuadForm> out;
    i64 bmax = static_cast<i64>(std::sqrt(static_cast<double>(D) / 3.0)) + 1;
    i64 bstart = (D % 2 == 0) ? 0 : 1;
    for (i64 b = bstart; b <= bmax; b += 2) {
        i64 m4 = b * b + D;
        if (m4 % 4 != 0) continue;
        i64 ac = m4 / 4;
        for (i64 a = std::max<i64>(b, 1); a * a <= ac; ++a) {
            if (ac % a != 0) continue;
            i64 c = ac / a;
            out.push_back({a, b, c});
            if (b > 0 && b < a && a < c) out.push_back({a, -b, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ClassGroup ClassGroup::build(i64 D) {
    if (D <= 0 || !is_fundamental_discriminant(-D))
        throw std::domain_error("ClassGroup: -D must be a fundamental discriminant");
    ClassGroup G;
    G.D_ = D;
    G.forms_ = reduced_forms(D);
    QuadForm e = principal_form(D);
    auto it = std::find(G.forms_.begin(), G.forms_.end(), e);
    if (it == G.forms_.end()) throw std::logic_error("ClassGroup: principal form missing");
    G.identity_ = static_cast<int>(it - G.forms_.begin());
    return G;
}

int ClassGroup::index_of(const QuadForm& f) const {
    QuadForm r = f.is_reduced() ? f : reduce(f);
    auto it = std::lower_bound(forms_.begin(), forms_.end(), r);
    if (it == forms_.end() || !(*it == r)) throw std::domain_error("ClassGroup: form not in group");
    return static_cast<int>(it - forms_.begin());
}

void ClassGroup::ensure_table() const {
    if (!table_.empty()) return;
    size_t n = forms_.size();
    table_.assign(n, std::vector<int>(n, -1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            QuadForm p = compose(forms_[i], forms_[j]);
            auto it = std::lower_bound(forms_.begin(), forms_.end(), p);
            if (it == forms_.end() || !(*it == p)) throw std::logic_error("ClassGroup: composition left the group");
            int k = static_cast<int>(it - forms_.begin());
            table_[i][j] = k;
            table_[j][i] = k;
        }
    }
}

int ClassGroup::mul(int i, int j) const {
    ensure_table();
    return table_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

int ClassGroup::inv(int i) const { return index_of(inverse_form(forms_[static_cast<size_t>(i)])); }

i64 ClassGroup::order_of(int g) const {
    int x = g;
    i64 k = 1;
    while (x != identity_) {
        x = mul(x, g);
        ++k;
        if (k > h()) throw std::logic_error("ClassGroup: order exceeds group size");
    }
    return k;
}

int ClassGroup::pow(int g, i64 k) const {
    i64 ord = order_of(g);
    k = mod_norm(k, ord);
    int acc = identity_;
    int base = g;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

const std::vector<ClassCharacter>& ClassGroup::characters() const {
    if (!chars_.empty()) return chars_;
    ensure_table();
    int n = static_cast<int>(forms_.size());

    // Grow a subgroup S one generator at a time; every character of S
    // extends in exactly k ways when the new generator has quotient order k.
    std::vector<int> in_s(static_cast<size_t>(n), 0);
    std::vector<int> members{identity_};
    in_s[static_cast<size_t>(identity_)] = 1;
    std::vector<std::vector<Phase>> chars{{Phase{0, 1}}};

    while (static_cast<int>(members.size()) < n) {
        int g = -1;
        for (int cand = 0; cand < n; ++cand)
            if (!in_s[static_cast<size_t>(cand)]) { g = cand; break; }
        i64 k = 0;
        int x = identity_;
        do {
            x = mul(x, g);
            ++k;
        } while (!in_s[static_cast<size_t>(x)]);
        int gk = x;  // g^k lies in S
        size_t old_size = members.size();
        std::map<int, size_t> pos;
        for (size_t i = 0; i < old_size; ++i) pos[members[i]] = i;

        std::vector<int> gpow{identity_};
        for (i64 t = 1; t < k; ++t) gpow.push_back(mul(gpow.back(), g));
        for (i64 t = 1; t < k; ++t)
            for (size_t i = 0; i < old_size; ++i) {
                int elem = mul(members[i], gpow[static_cast<size_t>(t)]);
                if (in_s[static_cast<size_t>(elem)]) throw std::logic_error("ClassGroup: coset collision");
                in_s[static_cast<size_t>(elem)] = 1;
                members.push_back(elem);
            }

        std::vector<std::vector<Phase>> next;
        next.reserve(chars.size() * static_cast<size_t>(k));
        for (const auto& chi : chars) {
            Phase alpha = chi[pos[gk]];
            for (i64 j = 0; j < k; ++j) {
                // chi'(g) must be a k-th root of chi(g^k)
                Phase at_g = phase_reduce(alpha.num + j * alpha.den, alpha.den * k);
                std::vector<Phase> ext(members.size());
                for (size_t i = 0; i < old_size; ++i) ext[i] = chi[i];
                for (i64 t = 1; t < k; ++t)
                    for (size_t i = 0; i < old_size; ++i)
                        ext[static_cast<size_t>(t) * old_size + i] = phase_add(chi[i], phase_mul_int(at_g, t));
                next.push_back(std::move(ext));
            }
        }
        chars = std::move(next);
    }

    std::vector<size_t> where(static_cast<size_t>(n));
    for (size_t i = 0; i < members.size(); ++i) where[static_cast<size_t>(members[i])] = i;
    std::vector<ClassCharacter> out;
    out.reserve(chars.size());
    for (const auto& chi : chars) {
        ClassCharacter c;
        c.phases.resize(static_cast<size_t>(n));
        for (int idx = 0; idx < n; ++idx) c.phases[static_cast<size_t>(idx)] = chi[where[static_cast<size_t>(idx)]];
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const ClassCharacter& a, const ClassCharacter& b) {
        for (size_t i = 0; i < a.phases.size(); ++i) {
            if (a.phases[i] == b.phases[i]) continue;
            return a.phases[i] < b.phases[i];
        }
        return false;
    });
    chars_ = std::move(out);
    return chars_;
}

}  // namespace hlab
