#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace caltrace {

// Thrown when two labels that live in different universes meet in one
// operation. Detected structurally: the conflict vectors differ in length.
class UniverseMismatch : public std::invalid_argument {
public:
    explicit UniverseMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// One slot of a label's conflict vector: Bottom (no information from that
/// conflict-of-interest set), Tainted (information from at least two of its
/// members), or Member (information from exactly one named facility).
class CoiEntry {
public:
    enum class Kind : std::uint8_t { Bottom, Tainted, Member };

    CoiEntry() = default;
    static CoiEntry bottom() { return CoiEntry{}; }
    static CoiEntry tainted();
    static CoiEntry member(std::string facility);

    Kind kind() const { return kind_; }
    bool is_bottom() const { return kind_ == Kind::Bottom; }
    bool is_tainted() const { return kind_ == Kind::Tainted; }
    bool is_member() const { return kind_ == Kind::Member; }

    // Member entries only; throws std::logic_error otherwise.
    const std::string& facility() const;

    friend bool operator==(const CoiEntry&, const CoiEntry&) = default;

private:
    Kind kind_ = Kind::Bottom;
    std::string facility_;
};

/// The global, ordered list of conflict-of-interest sets. Slot j of every
/// label refers to sets()[j] for the lifetime of the universe; a facility
/// may belong to several sets.
class CoiUniverse {
public:
    CoiUniverse() = default;

    // Validates and indexes the sets. Each set must be non-empty with
    // unique members; facility ids must be printable tokens free of the
    // label-text delimiters and distinct from the reserved "_" / "*".
    // Throws std::invalid_argument on violation.
    static CoiUniverse from_sets(std::vector<std::vector<std::string>> sets);

    std::size_t size() const { return sets_.size(); }
    bool empty() const { return sets_.empty(); }
    const std::vector<std::string>& set_at(std::size_t position) const;
    const std::vector<std::vector<std::string>>& sets() const { return sets_; }

    // Bag-semantics membership test: members are compared in declaration
    // order, so the cost is linear in the set size. Decision evaluation
    // goes through here; index-backed lookups are for fixture plumbing.
    bool contains(std::size_t position, std::string_view facility) const;

    // Every set position the facility belongs to (indexed, O(1) average).
    std::vector<std::size_t> sets_of(std::string_view facility) const;
    bool known_facility(std::string_view facility) const;

    friend bool operator==(const CoiUniverse& a, const CoiUniverse& b) {
        return a.sets_ == b.sets_;
    }

private:
    std::vector<std::vector<std::string>> sets_;
    std::unordered_map<std::string, std::vector<std::size_t>> facility_index_;
};

/// Integrity ranks are the integers 1..levels. Rank 1 is system high (the
/// most confidential, least public pole); rank `levels` is the public root.
struct IntegrityLadder {
    int levels = 1;

    bool valid_rank(int rank) const { return rank >= 1 && rank <= levels; }
    friend bool operator==(const IntegrityLadder&, const IntegrityLadder&) = default;
};

/// A security label: conflict vector aligned to the universe's set
/// positions plus an integrity rank. Labels are immutable values; all
/// operations over them are pure.
struct SecurityLabel {
    std::vector<CoiEntry> coi;
    int rank = 1;

    friend bool operator==(const SecurityLabel&, const SecurityLabel&) = default;
};

enum class LabelError { LengthMismatch, UnknownFacility, RankOutOfRange };

struct LabelValidation {
    std::optional<LabelError> error;
    std::size_t position = 0;  // failing slot, meaningful for UnknownFacility

    bool ok() const { return !error.has_value(); }
};

std::string to_string(LabelError);

// Checks vector length, Member validity against the universe, and rank
// range, reporting the first violation in that order.
LabelValidation validate_label(const SecurityLabel& label, const CoiUniverse& universe,
                               const IntegrityLadder& ladder);

/// Where a dominance check first fails. Slots are checked in order before
/// the rank comparison; `position` is meaningful when !rank_failed.
struct DominanceFailure {
    bool rank_failed = false;
    std::size_t position = 0;
};

// l1 dominates l2 iff at every slot (l1 == l2, or l2 is Bottom, or l1 is
// Tainted) and l1.rank <= l2.rank. Throws UniverseMismatch when the
// vectors differ in length.
std::optional<DominanceFailure> dominance_failure(const SecurityLabel& l1,
                                                  const SecurityLabel& l2);
bool dominates(const SecurityLabel& l1, const SecurityLabel& l2);

// Least upper bound under dominance: slot-wise Bottom is the identity,
// equal entries stay, distinct Members taint, Tainted absorbs; the result
// rank is the smaller of the two. Throws UniverseMismatch.
SecurityLabel join(const SecurityLabel& l1, const SecurityLabel& l2);

// The all-Bottom, lowest-integrity-rank label: dominated by every label.
SecurityLabel make_bottom(const CoiUniverse& universe, const IntegrityLadder& ladder);
// The all-Tainted, rank-1 label: dominates every label.
SecurityLabel make_system_high(const CoiUniverse& universe, const IntegrityLadder& ladder);

/// Canonical text form used in logs, manifests and on the wire:
/// `{coi:[_,O2,*], rank:2}` — `_` for Bottom, `*` for Tainted, the facility
/// id for Member. parse_label(print_label(l)) == l for every label whose
/// Member entries come from a well-formed universe, and
/// print_label(parse_label(s)) == s for every canonical string.
std::string print_label(const SecurityLabel& label);
SecurityLabel parse_label(std::string_view text);  // throws std::invalid_argument

}  // namespace caltrace
