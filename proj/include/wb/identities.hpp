#ifndef WB_IDENTITIES_HPP
#define WB_IDENTITIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "wb/congruence.hpp"
#include "wb/monoid.hpp"

namespace wb {

/// A formal identity u ~ v between words.
struct Identity {
    Word left;
    Word right;

    bool operator==(const Identity&) const = default;
};

/// Text format: `u ~ v` with the word grammar.
Identity parse_identity(const std::string& text);
std::string to_string(const Identity& id);

/// Outcome of a check. Fails from satisfies() carries the assignment; Fails
/// from tau_term/stability carries the violating identity. Bounded checks
/// never claim unbounded truth: they return HoldsUpToBound.
struct Verdict {
    enum class Status { Holds, Fails, HoldsUpToBound };

    Status status = Status::Holds;
    std::map<Letter, int> assignment;          // witness, for Fails from satisfies
    std::optional<Identity> counterexample;    // witness, for Fails from tau-term checks
    std::size_t bound = 0;                     // for HoldsUpToBound

    bool ok() const { return status != Status::Fails; }
};

std::string verdict_to_json(const Verdict& v, const FiniteMonoid* label_source = nullptr);

/// Exhaustive satisfaction check over all assignments with early exit. For
/// direct products the check runs componentwise on the recorded factors and
/// never enumerates the product carrier. Throws std::invalid_argument above
/// 10 distinct letters.
Verdict satisfies(const FiniteMonoid& m, const Identity& id);

/// sigma_n: u_0 = a^2b^2, v_0 = b^2a^2, u_{k+1} = x_{k+1} t_{k+1} u_k with
/// x_k alternating a, b, a, ... (same prefix on both sides).
Identity sigma_pair(int n);

/// The long identity family: U_n = x y1^2...yn^2 x ~ x y1^2 x y2^2 x ... x yn^2 x = V_n.
Identity long_pair(int n);

/// Is w a tau-term for m, up to candidate words over content(w) of length
/// <= max_len: every v with m |= w ~ v must satisfy w tau v.
Verdict tau_term_check(const FiniteMonoid& m, const Word& w, const CongruenceId& c, std::size_t max_len);

/// Is the class of rep stable with respect to m: tau_term_check for every
/// class member of length <= max_len.
Verdict stability_check(const FiniteMonoid& m, const CongruenceId& c, const Word& rep, std::size_t max_len);

struct Separation {
    Identity id;
    bool m_satisfies = true;  // true: m |= id, n |/= id; false: the other way
};

/// First identity (words over <= max_letters letters, length <= max_len,
/// deterministic shortlex pair order) separating m and n, or nullopt.
std::optional<Separation> equational_separation(const FiniteMonoid& m, const FiniteMonoid& n,
                                                int max_letters, std::size_t max_len);

/// Non-finite-basability premise battery: (a) the long identities hold for
/// 1 <= n <= n_max; (b) the (t1^gamma)-class of ab^2ta is stable; (c) the
/// beta-class of atb^2a is stable. With dual=true the premises are the
/// reversed-word duals ((t1^gamma)-class of atb^2a, beta-dual-class of
/// ab^2ta), for checking opposite monoids. The conclusion is only ever
/// "premises verified at bound", never a proof.
struct NfbReport {
    struct Entry {
        std::string name;
        Verdict verdict;
    };
    std::vector<Entry> entries;
    std::size_t len_bound = 0;
    int n_max = 0;
    bool dual = false;

    bool all_passed() const;
    std::string summary() const;
};

NfbReport nfb_premises(const FiniteMonoid& m, int n_max, std::size_t len_max, bool dual = false);

}  // namespace wb

#endif
