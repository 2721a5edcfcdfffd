#pragma once
// Rank-2 Chern data arithmetic: twists, Segre classes, Chern character.
//
// c1 is the coefficient of H and c2 the coefficient of H^2. Both are exact
// rationals so that formal half-integer twists such as E(7/2) stay exact;
// operations that need an honest bundle check integrality themselves.

#include "qchow/chow.hpp"
#include "qchow/rational.hpp"
#include "qchow/series.hpp"

#include <vector>

namespace qchow {

struct ChernData {
    static constexpr int kRank = 2;

    Rational c1 = 0;
    Rational c2 = 0;

    bool is_integral() const { return is_integer(c1) && is_integer(c2); }
    Rational discriminant() const { return c1 * c1 - 4 * c2; }

    friend bool operator==(const ChernData&, const ChernData&) = default;
};

ChernData make_chern(long c1, long c2);

// Chern data of E(t) = E tensor O(tH): (c1 + 2t, c2 + t c1 + t^2).
ChernData twist(const ChernData& d, const Rational& t);

// s_0..s_{i_max} from s_i = c1 s_{i-1} - c2 s_{i-2}.
std::vector<Rational> segre_recurrence(const ChernData& d, int i_max);

// s_0..s_{i_max} as the truncated inverse of 1 - c1 t + c2 t^2.
std::vector<Rational> segre_inversion(const ChernData& d, int i_max);

// 2c1^6 - 10c1^4c2 + 12c1^2c2^2 - 2c2^3: the top Segre number on Q^6 with the
// degree factor 2 folded in.
Rational s6_closed_form_q6(const ChernData& d);

// Power sums p_0 = 2, p_1 = c1, p_i = c1 p_{i-1} - c2 p_{i-2} of the Chern roots.
std::vector<Rational> power_sums(const ChernData& d, int i_max);

// ch(E) = 2 + sum_{i>=1} p_i/i! H^i truncated at H^n. Requires n >= 1.
TruncatedSeries chern_character(const ChernData& d, int n);
ChowClass chern_character(const ChernData& d, const QuadricContext& ctx);

}  // namespace qchow
