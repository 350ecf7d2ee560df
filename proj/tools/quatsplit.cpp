// quatsplit: decide whether H(p, q) is a division algebra over a number field.
//
//   quatsplit classify --field cyclotomic:7 --p 3 --q 2
//   quatsplit ramification --a 3 --b 2
//   quatsplit verify --field cyclotomic:5 --max-prime 200 --format csv --out report.csv
//
// Exit status: 0 success, 2 bad arguments, 3 unsupported field, 4 verify found
// disagreements (the report is still written).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "quatsplit/quatsplit.hpp"

namespace {

constexpr int kExitBadArguments = 2;
constexpr int kExitUnsupportedField = 3;
constexpr int kExitDisagreement = 4;

using quatsplit::i64;

int exit_code_for(const quatsplit::Error& e) {
    switch (e.code()) {
        case quatsplit::Errc::UnsupportedField:
        case quatsplit::Errc::BadModulus:
            return kExitUnsupportedField;
        default:
            return kExitBadArguments;
    }
}

std::string render_places(const quatsplit::RamificationData& data, char separator) {
    std::string out;
    for (const auto& place : data.ramified) {
        if (!out.empty()) {
            out += separator;
        }
        out += place.to_string();
    }
    return out;
}

int run_classify(const std::string& field_spec, i64 p, i64 q, const std::string& format) {
    const auto field = quatsplit::parse_field_spec(field_spec);
    const quatsplit::Verdict verdict =
        quatsplit::classify(field, quatsplit::Prime(p), quatsplit::Prime(q));
    const std::string spec = quatsplit::to_spec(field);
    const std::string criterion = verdict.deciding_criterion().value_or("");

    if (format == "json") {
        nlohmann::ordered_json trace = nlohmann::ordered_json::array();
        for (const auto& r : verdict.trace) {
            trace.push_back({{"id", r.id}, {"fired", r.fired}});
        }
        nlohmann::ordered_json out = {{"field", spec},
                                      {"p1", p},
                                      {"p2", q},
                                      {"classify", quatsplit::to_string(verdict.outcome)},
                                      {"certainty", quatsplit::to_string(verdict.certainty)},
                                      {"criterion", criterion},
                                      {"trace", verdict.trace_string()},
                                      {"records", trace}};
        std::cout << out.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << "field,p1,p2,classify,certainty,trace\n"
                  << quatsplit::detail::csv_escape(spec) << ',' << p << ',' << q << ','
                  << quatsplit::to_string(verdict.outcome) << ','
                  << quatsplit::to_string(verdict.certainty) << ','
                  << quatsplit::detail::csv_escape(verdict.trace_string()) << '\n';
    } else {
        std::cout << "field=" << spec << '\n'
                  << "p=" << p << '\n'
                  << "q=" << q << '\n'
                  << "outcome=" << quatsplit::to_string(verdict.outcome) << '\n'
                  << "certainty=" << quatsplit::to_string(verdict.certainty) << '\n'
                  << "criterion=" << (criterion.empty() ? "none" : criterion) << '\n'
                  << "trace=" << verdict.trace_string() << '\n';
    }
    return 0;
}

int run_ramification(i64 a, i64 b, const std::string& format) {
    if (a == 0 || b == 0) {
        throw quatsplit::Error(quatsplit::Errc::InvalidArgument, "a and b must be nonzero");
    }
    const auto data = quatsplit::ramified_places(a, b);
    if (format == "json") {
        nlohmann::ordered_json places = nlohmann::ordered_json::array();
        for (const auto& place : data.ramified) {
            places.push_back(place.to_string());
        }
        nlohmann::ordered_json out = {{"a", a},
                                      {"b", b},
                                      {"places", places},
                                      {"reduced_discriminant", data.reduced_discriminant}};
        std::cout << out.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << "a,b,places,reduced_discriminant\n"
                  << a << ',' << b << ',' << render_places(data, ';') << ','
                  << data.reduced_discriminant << '\n';
    } else {
        std::cout << "places={" << render_places(data, ',') << "}\n"
                  << "D=" << data.reduced_discriminant << '\n';
    }
    return 0;
}

int run_verify(const std::string& field_spec, i64 max_prime, const std::string& out_path,
               const std::string& format) {
    const auto field = quatsplit::parse_field_spec(field_spec);
    const auto report = quatsplit::run_sweep(field, max_prime);

    std::string body;
    if (format == "json") {
        body = quatsplit::to_json(report).dump(2) + "\n";
    } else if (format == "csv") {
        body = quatsplit::to_csv(report);
    } else {
        body = quatsplit::to_text(report);
    }

    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            throw quatsplit::Error(quatsplit::Errc::InvalidArgument,
                                   "cannot open '" + out_path + "' for writing");
        }
        file << body;
        const auto& s = report.summary;
        std::cout << "pairs=" << report.rows.size() << " agree=" << s.agree
                  << " disagree=" << s.disagree << " unknown=" << s.unknown << '\n';
    }
    return report.summary.disagree == 0 ? 0 : kExitDisagreement;
}

}

int main(int argc, char** argv) {
    CLI::App app{"Division vs split decisions for quaternion algebras H(p, q)"};
    app.require_subcommand(1);

    std::string field_spec;
    std::string format = "text";
    std::string out_path;
    i64 p = 0;
    i64 q = 0;
    i64 a = 0;
    i64 b = 0;
    i64 max_prime = 0;

    const auto formats = CLI::IsMember({"text", "json", "csv"});

    auto* classify = app.add_subcommand("classify", "Classify H(p, q) over a base field");
    classify->add_option("--field", field_spec, "quadratic:<d> | biquadratic:<d1>,<d2> | "
                                                "cyclotomic:<n> | kummer:<l>^<k>")
        ->required();
    classify->add_option("--p", p, "first prime")->required();
    classify->add_option("--q", q, "second prime")->required();
    classify->add_option("--format", format)->check(formats);

    auto* ramification =
        app.add_subcommand("ramification", "Ramified places and discriminant of H_Q(a, b)");
    ramification->add_option("--a", a)->required();
    ramification->add_option("--b", b)->required();
    ramification->add_option("--format", format)->check(formats);

    auto* verify = app.add_subcommand("verify", "Sweep the classifier against the oracle");
    verify->add_option("--field", field_spec)->required();
    verify->add_option("--max-prime", max_prime)->required();
    verify->add_option("--out", out_path, "write the report here instead of stdout");
    verify->add_option("--format", format)->check(formats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitBadArguments;
    }

    try {
        if (classify->parsed()) {
            return run_classify(field_spec, p, q, format);
        }
        if (ramification->parsed()) {
            return run_ramification(a, b, format);
        }
        return run_verify(field_spec, max_prime, out_path, format);
    } catch (const quatsplit::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}
