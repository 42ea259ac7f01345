#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <span>
#include <string>

#include "caltrace/label.hpp"

namespace caltrace {

class CalibrationStore;

enum class Action { Read, Write, VerifyChain };
enum class Outcome { Permit, Deny };

/// Unified evaluates the dominance relation in one pass. BaselineConjunction
/// decomposes the same semantics into three independent sub-policies
/// (confidentiality rank, integrity rank, conflict-of-interest slots)
/// combined permit-unless-deny; outcomes are identical by construction,
/// only the evaluation cost differs.
enum class EngineMode { Unified, BaselineConjunction };

enum class ReasonKind {
    None,
    DominanceFailed,
    RankFailed,
    ConflictTaint,
    ReportExpired,
    BrokenChain,
};

struct DenyReason {
    ReasonKind kind = ReasonKind::None;
    std::size_t coi_position = 0;     // DominanceFailed / ConflictTaint slot
    std::ptrdiff_t chain_index = -1;  // failing element for chain decisions
    std::string device_id;            // failing device where known

    friend bool operator==(const DenyReason&, const DenyReason&) = default;
};

struct Decision {
    Outcome outcome = Outcome::Deny;
    DenyReason reason;
    std::chrono::nanoseconds evaluation_time{0};

    bool permitted() const { return outcome == Outcome::Permit; }
};

struct AccessRequest {
    std::string request_id;
    std::string subject_id;
    SecurityLabel subject_label;
    Action action = Action::Read;
    std::string resource;    // report id for Read, device id for Write/VerifyChain
    std::int64_t as_of = 0;  // expiry probe for VerifyChain (unix seconds)
};

std::string to_string(Action action);
std::string to_string(Outcome outcome);
std::string to_string(EngineMode mode);
std::string reason_to_string(const DenyReason& reason);
Action parse_action(std::string_view text);        // throws std::invalid_argument
EngineMode parse_engine_mode(std::string_view text);

class EmptyChain : public std::invalid_argument {
public:
    EmptyChain() : std::invalid_argument("chain verification over an empty chain") {}
};

struct ChainView;

/// Stateless decision evaluation over immutable labels; safe for
/// unrestricted concurrent use. Request labels are validated against the
/// universe on every evaluation (attributes arrive untrusted), so decision
/// cost scales with the referenced conflict sets' sizes.
class DecisionEngine {
public:
    DecisionEngine(EngineMode mode, std::shared_ptr<const CoiUniverse> universe,
                   IntegrityLadder ladder);

    EngineMode mode() const { return mode_; }
    const CoiUniverse& universe() const { return *universe_; }
    const std::shared_ptr<const CoiUniverse>& universe_ptr() const { return universe_; }
    IntegrityLadder ladder() const { return ladder_; }

    // Simple property: the subject may read a report iff the subject's
    // label dominates the report's.
    Decision evaluate_read(const SecurityLabel& subject, const SecurityLabel& report) const;

    // Star confinement property: the subject may write (calibrate) an
    // object iff the object's label dominates the subject's.
    Decision evaluate_write(const SecurityLabel& subject, const SecurityLabel& object) const;

    // Chain verification: the subject must dominate every chain element.
    // Throws EmptyChain when the chain has no elements.
    Decision evaluate_chain(const SecurityLabel& subject,
                            std::span<const SecurityLabel> chain) const;
    Decision evaluate_chain(const SecurityLabel& subject, const ChainView& chain) const;

    // Resolves the request's labels and chain against the store, runs the
    // engine's rules, and records wall-clock evaluation time (resolution +
    // rule checks, excluding request parsing). Store lookup failures
    // propagate as StoreError.
    Decision timed_evaluate(const AccessRequest& request, const CalibrationStore& store) const;

private:
    template <typename LabelRange>
    Decision chain_decision(const SecurityLabel& subject, const LabelRange& chain) const;

    void require_valid(const SecurityLabel& label, const char* role) const;

    EngineMode mode_;
    std::shared_ptr<const CoiUniverse> universe_;
    IntegrityLadder ladder_;
};

}  // namespace caltrace
