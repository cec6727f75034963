#pragma once

#include "permclass/perm.hpp"
#include "permclass/roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace permclass {

// a_1, a_2, ... with every term from index head.size()+1 on equal to tail.
struct TailSequence {
    std::vector<long> head;
    long tail = 0;

    long at(int n) const { return n <= static_cast<int>(head.size()) ? head[n - 1] : tail; }
    std::string to_string() const;
    static TailSequence parse(const std::string& text);  // "1,1,2,3,5,7,8'" with the repeated term barred
};

// Eventually periodic integer sequence: head, then the block repeated forever.
struct PeriodicSequence {
    std::vector<long> head;
    std::vector<long> period;

    long at(int n) const;
    // With a period of length one, this is the TailSequence form.
    std::optional<TailSequence> as_tail() const;
    std::string to_string() const;
};

// Sum of c_i beta^{-i}, i = 0..k.
struct GeneralisedDigit {
    std::vector<long> c;

    GeneralisedDigit() = default;
    GeneralisedDigit(long d) : c{d} {}
    explicit GeneralisedDigit(std::vector<long> sub);

    Rational value(const Rational& beta) const;
    double value(double beta) const;
    GeneralisedDigit operator+(const GeneralisedDigit& o) const;
    bool dominated_by(const GeneralisedDigit& o) const;  // componentwise <=
    auto operator<=>(const GeneralisedDigit&) const = default;

    std::string to_string() const;             // "1.221"
    static GeneralisedDigit parse(const std::string& s);
};

// A_1, A_2, ...: the explicit sets, then the periodic block repeated forever.
struct DigitSystem {
    std::vector<std::vector<GeneralisedDigit>> head;
    std::vector<std::vector<GeneralisedDigit>> period;

    const std::vector<GeneralisedDigit>& at(int n) const;
    int checked_length() const { return static_cast<int>(head.size() + period.size()); }
};

// The unique gamma > 1 with sum a_n gamma^{-n} = 1.
RootInterval sum_closed_growth(const TailSequence& s, const Rational& precision);
RootInterval sum_closed_growth(const PeriodicSequence& s, const Rational& precision);

bool gap_inequalities_hold(const DigitSystem& d, const Rational& beta);
// Largest gap between neighbouring values of A_n and the width of A_n, at beta.
Rational digit_gap(const std::vector<GeneralisedDigit>& a, const Rational& beta);
Rational digit_width(const std::vector<GeneralisedDigit>& a, const Rational& beta);

// Boundary between hold=true and hold=false in [lo, hi], to the given width.
RootInterval gap_threshold(const DigitSystem& d, Rational lo, Rational hi, const Rational& precision);

std::vector<GeneralisedDigit> greedy_expansion(const Rational& x, const DigitSystem& d, const Rational& beta,
                                               int n_digits);
Rational expansion_value(const std::vector<GeneralisedDigit>& digits, const Rational& beta);

// Increasing oscillation of length n: primary has its least entry at an end of the path, secondary its first entry.
Permutation build_oscillation(int n, bool secondary = false);
// Lower path end inflated by an increasing run of length r, upper end by one of length s.
Permutation build_inflated(int n, int r, int s, bool secondary = false);
Permutation build_star(int u);  // psi_u = (u+1) 1 2 ... u
std::pair<int, int> oscillation_ends(const Permutation& osc);  // (lower end, upper end) positions

// R_n^{r,s}: inflations with 2 <= u <= r and 2 <= v <= s, indexed [u-2][v-2].
std::vector<std::vector<Permutation>> r_set(int n, int r, int s);

// Q^{r,s} by length 1..n_max: indecomposable subpermutations of the inflated oscillations, minus every R_n.
std::vector<std::vector<Permutation>> q_members(int r, int s, int n_max);
std::vector<long> enumerate_Q(int r, int s, int n_max);
TailSequence q_sequence(int r, int s);

// Same as q_members, by checking every subset of each inflated oscillation with n <= n_osc.
std::vector<std::vector<Permutation>> q_members_brute(int r, int s, int n_max, int n_osc);

// Distinct enumerations of downsets of R_n^{r,s} containing the (3,2) inflation; digit i counts length n+2+i.
std::vector<GeneralisedDigit> family_digits(int r, int s);
int family_downset_count(int r, int s);

// U below L: downsets of (indecomposables below U) minus Q that contain L.
struct ExtraSpec {
    std::vector<Permutation> upper;
    std::vector<Permutation> lower;
};

struct ExtraDigits {
    int index = 0;                           // length of the shortest candidate
    std::vector<Permutation> candidates;     // indecomposables below U and outside Q
    std::vector<GeneralisedDigit> digits;    // distinct enumerations, c_i counts length index+i
    long downsets = 0;
};

ExtraDigits extra_digits(int r, int s, int k, const std::vector<ExtraSpec>& extras);

struct FamilySpec {
    std::string name;
    int r = 5, s = 3, k = 5;
    std::vector<ExtraSpec> extras;

    static FamilySpec named(const std::string& name);  // "A" .. "E"
    // key=value lines: r=, s=, k=, extras=U1 U2 / L1 L2 ; ... (one U/L pair per ';')
    static FamilySpec parse(const std::string& text);
};

struct FamilyInterval {
    FamilySpec spec;
    TailSequence q;
    ExtraDigits extras;
    std::vector<GeneralisedDigit> f_digits;
    DigitSystem system;
    PeriodicSequence lower_seq, upper_seq;
    RootInterval lower, upper;
    std::optional<RootInterval> gamma_min;  // set when the gap inequalities fail just below lower
    RootInterval gamma_max;
    bool covered = false;
    double covered_lo() const { return lower.value(); }
    double covered_hi() const;
};

FamilyInterval family_interval(const FamilySpec& spec, const Rational& precision);

// Integer sequence of a digit selection (one digit per index) from a digit system.
PeriodicSequence flatten_digits(const DigitSystem& d, const std::vector<GeneralisedDigit>& choice_head,
                                const std::vector<GeneralisedDigit>& choice_period);

// Named constants from their minimal polynomials.
Polynomial theta_b_poly();
Polynomial lambda_b_poly();
Polynomial lambda_a_poly();
Polynomial kappa_poly();
Polynomial gamma_max_poly();

}  // namespace permclass
