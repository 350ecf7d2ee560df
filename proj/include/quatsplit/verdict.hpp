#ifndef QUATSPLIT_VERDICT_HPP
#define QUATSPLIT_VERDICT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quatsplit {

enum class Outcome { Division, Split, Unknown };
enum class Certainty { Exact, SufficientOnly };

inline std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::Division: return "Division";
        case Outcome::Split: return "Split";
        case Outcome::Unknown: return "Unknown";
    }
    return "?";
}

inline std::string_view to_string(Certainty c) {
    return c == Certainty::Exact ? "Exact" : "SufficientOnly";
}

/// One evaluated criterion (or a reduction step, which is always recorded as fired).
/// Ids never contain ':' ';' or ','.
struct TraceRecord {
    std::string id;
    bool fired;

    friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct Verdict {
    Outcome outcome;
    Certainty certainty;
    std::vector<TraceRecord> trace;

    /// First criterion that fired, skipping reduction steps.
    std::optional<std::string> deciding_criterion() const {
        for (const auto& r : trace) {
            if (r.fired && r.id.find("->") == std::string::npos) {
                return r.id;
            }
        }
        return std::nullopt;
    }

    /// "id:1;id:0;..." in evaluation order.
    std::string trace_string() const {
        std::string out;
        for (const auto& r : trace) {
            if (!out.empty()) {
                out += ';';
            }
            out += r.id;
            out += r.fired ? ":1" : ":0";
        }
        return out;
    }

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

}

#endif
