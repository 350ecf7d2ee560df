#ifndef QUATSPLIT_REPORT_HPP
#define QUATSPLIT_REPORT_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "arith.hpp"
#include "classify.hpp"
#include "field.hpp"
#include "oracle.hpp"
#include "verdict.hpp"

namespace quatsplit {

struct SweepRow {
    i64 p1;
    i64 p2;
    Outcome classify;
    Certainty certainty;
    Outcome oracle;
    bool agree;
    std::string trace;
};

struct SweepSummary {
    i64 agree = 0;
    /// Rows with a definite classifier outcome that the oracle contradicts.
    i64 disagree = 0;
    /// Rows where the classifier answered Unknown.
    i64 unknown = 0;
    /// Unknown rows split by oracle outcome; the first counts Division cases
    /// the sufficient condition missed.
    i64 unknown_oracle_division = 0;
    i64 unknown_oracle_split = 0;
};

struct SweepReport {
    FieldDescriptor field;
    i64 max_prime;
    std::vector<SweepRow> rows;
    SweepSummary summary;
};

inline constexpr i64 kMaxSweepPrime = 10'000;

/// Classifier against oracle on every ordered pair of distinct primes <= max_prime,
/// rows ascending by (p1, p2).
inline SweepReport run_sweep(const FieldDescriptor& field, i64 max_prime) {
    if (max_prime < 2 || max_prime > kMaxSweepPrime) {
        throw Error(Errc::InvalidArgument, "max prime must lie in [2, " +
                                               std::to_string(kMaxSweepPrime) + "]");
    }
    SweepReport report{field, max_prime, {}, {}};
    const auto primes = primes_up_to(max_prime);
    report.rows.reserve(primes.size() * primes.size());
    for (i64 a : primes) {
        for (i64 b : primes) {
            if (a == b) {
                continue;
            }
            const Prime p1(a);
            const Prime p2(b);
            const Verdict verdict = classify(field, p1, p2);
            const Outcome oracle = division_oracle(field, p1, p2);
            const bool agree = verdict.outcome == oracle;
            report.rows.push_back(
                {a, b, verdict.outcome, verdict.certainty, oracle, agree, verdict.trace_string()});

            auto& s = report.summary;
            if (verdict.outcome == Outcome::Unknown) {
                ++s.unknown;
                ++(oracle == Outcome::Division ? s.unknown_oracle_division
                                               : s.unknown_oracle_split);
            } else if (agree) {
                ++s.agree;
            } else {
                ++s.disagree;
            }
        }
    }
    std::sort(report.rows.begin(), report.rows.end(), [](const SweepRow& x, const SweepRow& y) {
        return std::tie(x.p1, x.p2) < std::tie(y.p1, y.p2);
    });
    return report;
}

namespace detail {

inline std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) {
        return cell;
    }
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

}

inline constexpr const char* kCsvHeader = "field,p1,p2,classify,certainty,oracle,agree,trace";

inline std::string to_csv(const SweepReport& report) {
    std::ostringstream out;
    const std::string field = detail::csv_escape(to_spec(report.field));
    out << kCsvHeader << '\n';
    for (const auto& row : report.rows) {
        out << field << ',' << row.p1 << ',' << row.p2 << ',' << to_string(row.classify) << ','
            << to_string(row.certainty) << ',' << to_string(row.oracle) << ','
            << (row.agree ? "true" : "false") << ',' << detail::csv_escape(row.trace) << '\n';
    }
    return out.str();
}

inline nlohmann::ordered_json to_json(const SweepReport& report) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    const std::string field = to_spec(report.field);
    for (const auto& row : report.rows) {
        rows.push_back({{"field", field},
                        {"p1", row.p1},
                        {"p2", row.p2},
                        {"classify", to_string(row.classify)},
                        {"certainty", to_string(row.certainty)},
                        {"oracle", to_string(row.oracle)},
                        {"agree", row.agree},
                        {"trace", row.trace}});
    }
    const auto& s = report.summary;
    return {{"field", field},
            {"max_prime", report.max_prime},
            {"rows", std::move(rows)},
            {"summary",
             {{"agree", s.agree},
              {"disagree", s.disagree},
              {"unknown", s.unknown},
              {"unknown_oracle_division", s.unknown_oracle_division},
              {"unknown_oracle_split", s.unknown_oracle_split}}}};
}

/// Human-readable summary; lists disagreements and oracle-Division pairs the
/// classifier could not decide.
inline std::string to_text(const SweepReport& report) {
    std::ostringstream out;
    const auto& s = report.summary;
    out << "field: " << to_spec(report.field) << '\n'
        << "max_prime: " << report.max_prime << '\n'
        << "pairs: " << report.rows.size() << '\n'
        << "agree: " << s.agree << '\n'
        << "disagree: " << s.disagree << '\n'
        << "unknown: " << s.unknown << " (oracle Division " << s.unknown_oracle_division
        << ", oracle Split " << s.unknown_oracle_split << ")\n";
    for (const auto& row : report.rows) {
        const bool mismatch = row.classify != Outcome::Unknown && !row.agree;
        const bool uncovered = row.classify == Outcome::Unknown && row.oracle == Outcome::Division;
        if (mismatch) {
            out << "DISAGREE";
        } else if (uncovered) {
            out << "UNCOVERED";
        } else {
            continue;
        }
        out << " p1=" << row.p1 << " p2=" << row.p2 << " classify=" << to_string(row.classify)
            << " oracle=" << to_string(row.oracle) << " trace=" << row.trace << '\n';
    }
    return out.str();
}

}

#endif
