#pragma once

// Class groups CL_K of imaginary quadratic fields as sets of reduced forms,
// with group structure discovered by composition and the full character table.
// Character values are exact roots of unity kept as rational phases.

#include <map>
#include <vector>

#include "hlab/quadform.hpp"

namespace hlab {

// reduced rational phase p/q in [0,1): chi = e(p/q)
struct Phase {
    i64 num = 0;
    i64 den = 1;
    cplx value() const { return e_frac(num, den); }
    bool operator==(const Phase&) const = default;
    bool operator<(const Phase& o) const { return num * o.den < o.num * den; }
};

Phase phase_reduce(i64 num, i64 den);
Phase phase_add(Phase a, Phase b);
Phase phase_mul_int(Phase a, i64 t);

struct ClassCharacter {
    std::vector<Phase> phases;  // indexed like ClassGroup::forms
    cplx operator()(int idx) const { return phases[static_cast<size_t>(idx)].value(); }
    bool is_trivial() const {
        for (const auto& p : phases)
            if (p.num != 0) return false;
        return true;
    }
};

class ClassGroup {
  public:
    // builds the group of discriminant -D; throws unless -D is fundamental
    static ClassGroup build(i64 D);

    i64 D() const { return D_; }
    i64 h() const { return static_cast<i64>(forms_.size()); }
    const std::vector<QuadForm>& forms() const { return forms_; }
    const QuadForm& form(int idx) const { return forms_[static_cast<size_t>(idx)]; }
    int identity() const { return identity_; }

    int index_of(const QuadForm& f) const;  // f need not be reduced
    int mul(int i, int j) const;
    int inv(int i) const;
    int pow(int g, i64 k) const;
    i64 order_of(int g) const;

    // all h characters; trivial character first, deterministic order
    const std::vector<ClassCharacter>& characters() const;

  private:
    i64 D_ = 0;
    std::vector<QuadForm> forms_;
    int identity_ = 0;
    mutable std::vector<std::vector<int>> table_;  // lazily built composition table
    mutable std::vector<ClassCharacter> chars_;
    void ensure_table() const;
};

// Enumerate reduced forms of discriminant -D (no fundamentality requirement).
std::vector<QuadForm> reduced_forms(i64 D);

}  // namespace hlab
