#include "caltrace/label.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

namespace caltrace {

CoiEntry CoiEntry::tainted() {
    CoiEntry e;
    e.kind_ = Kind::Tainted;
    return e;
}

CoiEntry CoiEntry::member(std::string facility) {
    if (facility.empty()) {
        throw std::invalid_argument("member entry needs a facility id");
    }
    CoiEntry e;
    e.kind_ = Kind::Member;
    e.facility_ = std::move(facility);
    return e;
}

const std::string& CoiEntry::facility() const {
    if (kind_ != Kind::Member) {
        throw std::logic_error("facility() on a non-member entry");
    }
    return facility_;
}

namespace {

bool valid_facility_token(std::string_view id) {
    if (id.empty() || id == "_" || id == "*") return false;
    for (char c : id) {
        if (c == ',' || c == '[' || c == ']' || c == '{' || c == '}' || c == ':' ||
            static_cast<unsigned char>(c) <= ' ' || c == 127) {
            return false;
        }
    }
    return true;
}

}  // namespace

CoiUniverse CoiUniverse::from_sets(std::vector<std::vector<std::string>> sets) {
    CoiUniverse u;
    for (std::size_t j = 0; j < sets.size(); ++j) {
        const auto& set = sets[j];
        if (set.empty()) {
            throw std::invalid_argument("COI set " + std::to_string(j) + " is empty");
        }
        std::unordered_set<std::string_view> seen;
        for (const auto& facility : set) {
            if (!valid_facility_token(facility)) {
                throw std::invalid_argument("bad facility id '" + facility + "' in COI set " +
                                            std::to_string(j));
            }
            if (!seen.insert(facility).second) {
                throw std::invalid_argument("duplicate facility '" + facility + "' in COI set " +
                                            std::to_string(j));
            }
        }
    }
    u.sets_ = std::move(sets);
    for (std::size_t j = 0; j < u.sets_.size(); ++j) {
        for (const auto& facility : u.sets_[j]) {
            u.facility_index_[facility].push_back(j);
        }
    }
    return u;
}

const std::vector<std::string>& CoiUniverse::set_at(std::size_t position) const {
    if (position >= sets_.size()) {
        throw std::out_of_range("COI set position " + std::to_string(position));
    }
    return sets_[position];
}

bool CoiUniverse::contains(std::size_t position, std::string_view facility) const {
    const auto& set = set_at(position);
    for (const auto& member : set) {
        if (member == facility) return true;
    }
    return false;
}

std::vector<std::size_t> CoiUniverse::sets_of(std::string_view facility) const {
    auto it = facility_index_.find(std::string(facility));
    if (it == facility_index_.end()) return {};
    return it->second;
}

bool CoiUniverse::known_facility(std::string_view facility) const {
    return facility_index_.find(std::string(facility)) != facility_index_.end();
}

std::string to_string(LabelError err) {
    switch (err) {
        case LabelError::LengthMismatch: return "length_mismatch";
        case LabelError::UnknownFacility: return "unknown_facility";
        case LabelError::RankOutOfRange: return "rank_out_of_range";
    }
    return "unknown";
}

LabelValidation validate_label(const SecurityLabel& label, const CoiUniverse& universe,
                               const IntegrityLadder& ladder) {
    if (label.coi.size() != universe.size()) {
        return {LabelError::LengthMismatch, 0};
    }
    for (std::size_t j = 0; j < label.coi.size(); ++j) {
        const CoiEntry& entry = label.coi[j];
        if (entry.is_member() && !universe.contains(j, entry.facility())) {
            return {LabelError::UnknownFacility, j};
        }
    }
    if (!ladder.valid_rank(label.rank)) {
        return {LabelError::RankOutOfRange, 0};
    }
    return {};
}

std::optional<DominanceFailure> dominance_failure(const SecurityLabel& l1,
                                                  const SecurityLabel& l2) {
    if (l1.coi.size() != l2.coi.size()) {
        throw UniverseMismatch("dominance over labels of length " + std::to_string(l1.coi.size()) +
                               " and " + std::to_string(l2.coi.size()));
    }
    for (std::size_t k = 0; k < l1.coi.size(); ++k) {
        const CoiEntry& a = l1.coi[k];
        const CoiEntry& b = l2.coi[k];
        if (a == b || b.is_bottom() || a.is_tainted()) continue;
        return DominanceFailure{false, k};
    }
    if (l1.rank > l2.rank) {
        return DominanceFailure{true, 0};
    }
    return std::nullopt;
}

bool dominates(const SecurityLabel& l1, const SecurityLabel& l2) {
    return !dominance_failure(l1, l2).has_value();
}

SecurityLabel join(const SecurityLabel& l1, const SecurityLabel& l2) {
    if (l1.coi.size() != l2.coi.size()) {
        throw UniverseMismatch("join over labels of length " + std::to_string(l1.coi.size()) +
                               " and " + std::to_string(l2.coi.size()));
    }
    SecurityLabel out;
    out.coi.reserve(l1.coi.size());
    for (std::size_t k = 0; k < l1.coi.size(); ++k) {
        const CoiEntry& a = l1.coi[k];
        const CoiEntry& b = l2.coi[k];
        if (a == b) {
            out.coi.push_back(a);
        } else if (a.is_bottom()) {
            out.coi.push_back(b);
        } else if (b.is_bottom()) {
            out.coi.push_back(a);
        } else {
            // Distinct members, or one side already tainted.
            out.coi.push_back(CoiEntry::tainted());
        }
    }
    out.rank = std::min(l1.rank, l2.rank);
    return out;
}

SecurityLabel make_bottom(const CoiUniverse& universe, const IntegrityLadder& ladder) {
    SecurityLabel label;
    label.coi.assign(universe.size(), CoiEntry::bottom());
    label.rank = ladder.levels;
    return label;
}

SecurityLabel make_system_high(const CoiUniverse& universe, const IntegrityLadder& ladder) {
    (void)ladder;
    SecurityLabel label;
    label.coi.assign(universe.size(), CoiEntry::tainted());
    label.rank = 1;
    return label;
}

std::string print_label(const SecurityLabel& label) {
    std::string out = "{coi:[";
    for (std::size_t k = 0; k < label.coi.size(); ++k) {
        if (k > 0) out += ',';
        const CoiEntry& entry = label.coi[k];
        switch (entry.kind()) {
            case CoiEntry::Kind::Bottom: out += '_'; break;
            case CoiEntry::Kind::Tainted: out += '*'; break;
            case CoiEntry::Kind::Member: out += entry.facility(); break;
        }
    }
    out += "], rank:";
    out += std::to_string(label.rank);
    out += '}';
    return out;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text) {
    throw std::invalid_argument("malformed label text: '" + std::string(text) + "'");
}

bool consume(std::string_view& rest, std::string_view prefix) {
    if (rest.substr(0, prefix.size()) != prefix) return false;
    rest.remove_prefix(prefix.size());
    return true;
}

}  // namespace

SecurityLabel parse_label(std::string_view text) {
    std::string_view rest = text;
    if (!consume(rest, "{coi:[")) parse_fail(text);

    SecurityLabel label;
    if (!consume(rest, "]")) {
        while (true) {
            std::size_t end = rest.find_first_of(",]");
            if (end == std::string_view::npos) parse_fail(text);
            std::string_view token = rest.substr(0, end);
            if (token == "_") {
                label.coi.push_back(CoiEntry::bottom());
            } else if (token == "*") {
                label.coi.push_back(CoiEntry::tainted());
            } else if (valid_facility_token(token)) {
                label.coi.push_back(CoiEntry::member(std::string(token)));
            } else {
                parse_fail(text);
            }
            bool closing = rest[end] == ']';
            rest.remove_prefix(end + 1);
            if (closing) break;
        }
    }
    if (!consume(rest, ", rank:")) parse_fail(text);

    int rank = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), rank);
    if (ec != std::errc{} || ptr == rest.data()) parse_fail(text);
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    if (rest != "}") parse_fail(text);

    label.rank = rank;
    return label;
}

}  // namespace caltrace
