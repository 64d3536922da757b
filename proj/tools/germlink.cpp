#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "germlink/report.hpp"

namespace {

using germlink::ChiMode;
using germlink::Int;

constexpr int kExitInvalid = 2;
constexpr int kExitInternal = 3;

struct Range {
    long long lo = 0;
    long long hi = 0; // inclusive
};

// "N" or "A..B"
Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    Range range;
    size_t used = 0;
    if (dots == std::string::npos) {
        range.lo = std::stoll(text, &used);
        range.hi = range.lo;
        if (used != text.size()) throw std::invalid_argument(text);
    } else {
        range.lo = std::stoll(text.substr(0, dots), &used);
        if (used != dots) throw std::invalid_argument(text);
        const std::string tail = text.substr(dots + 2);
        range.hi = std::stoll(tail, &used);
        if (tail.empty() || used != tail.size()) throw std::invalid_argument(text);
    }
    if (range.lo > range.hi) throw std::invalid_argument(text);
    return range;
}

ChiMode parse_chi_mode(const std::string& text) {
    if (text == "literal") return ChiMode::Literal;
    if (text == "join") return ChiMode::Join;
    return ChiMode::Both;
}

nlohmann::ordered_json error_json(const germlink::Error& e) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["error"] = {{"code", e.code()}, {"message", e.what()}};
    return j;
}

int exit_code(const germlink::Error& e) { return e.internal() ? kExitInternal : kExitInvalid; }

unsigned thread_budget() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("GERMLINK_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed >= 1) {
            n = std::min<unsigned>(n, static_cast<unsigned>(parsed));
        }
    }
    return n;
}

int run_analyze(long long p, long long q, long long r, const std::string& format, ChiMode mode) {
    try {
        if (format == "json") {
            std::cout << germlink::analyze_json(Int(p), Int(q), Int(r), mode).dump(2) << "\n";
        } else if (format == "dot") {
            std::cout << germlink::analyze_dot(Int(p), Int(q), Int(r));
        } else {
            std::cout << germlink::analyze_markdown(Int(p), Int(q), Int(r), mode);
        }
        return 0;
    } catch (const germlink::Error& e) {
        if (format == "json") {
            std::cout << error_json(e).dump(2) << "\n";
        } else {
            std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        }
        return exit_code(e);
    }
}

struct Triple {
    long long p, q, r;
};

int run_sweep(const Range& pr, const Range& qr, const Range& rr, const std::string& out_path,
              const std::string& format) {
    std::vector<Triple> triples;
    for (long long p = pr.lo; p <= pr.hi; ++p)
        for (long long q = qr.lo; q <= qr.hi; ++q)
            for (long long r = rr.lo; r <= rr.hi; ++r) triples.push_back({p, q, r});

    std::vector<nlohmann::ordered_json> results(triples.size());
    std::atomic<size_t> cursor{0};
    std::atomic<bool> internal_failure{false};
    auto worker = [&] {
        for (;;) {
            const size_t i = cursor.fetch_add(1);
            if (i >= triples.size()) return;
            const Triple& t = triples[i];
            try {
                results[i] = germlink::analyze_json(Int(t.p), Int(t.q), Int(t.r), ChiMode::Both);
            } catch (const germlink::Error& e) {
                results[i] = error_json(e);
                results[i]["params"] = {{"p", t.p}, {"q", t.q}, {"r", t.r}};
                if (e.internal()) internal_failure = true;
            }
        }
    };
    const unsigned n_threads = std::min<size_t>(thread_budget(), std::max<size_t>(triples.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned i = 0; i + 1 < n_threads; ++i) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error [io_failure]: cannot open " << out_path << "\n";
        return kExitInvalid;
    }
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["schema_version"] = 1;
        doc["results"] = results;
        out << doc.dump(2) << "\n";
    } else {
        out << "| p | q | r | e0 | neg.def. | num.Gorenstein | chi+K^2 | obstructed |\n";
        out << "|---|---|---|----|----------|----------------|---------|------------|\n";
        for (size_t i = 0; i < results.size(); ++i) {
            const Triple& t = triples[i];
            const auto& j = results[i];
            out << "| " << t.p << " | " << t.q << " | " << t.r << " | ";
            if (j.contains("error")) {
                out << "- | - | - | - | " << j["error"]["code"].get<std::string>() << " |\n";
                continue;
            }
            out << j["seifert"]["e0"]["num"].get<std::string>() << "/"
                << j["seifert"]["e0"]["den"].get<std::string>() << " | "
                << (j["verdicts"]["negative_definite"].get<bool>() ? "yes" : "no") << " | "
                << (j["verdicts"]["numerically_gorenstein"].get<bool>() ? "yes" : "no") << " | ";
            if (j["obstruction"]["gorenstein_possible"].get<bool>()) {
                out << j["obstruction"]["chi_plus_k2"].get<long long>();
            } else {
                out << "-";
            }
            out << " | " << (j["verdicts"]["smoothing_obstructed"].get<bool>() ? "yes" : "no") << " |\n";
        }
    }
    return internal_failure ? kExitInternal : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of the real germ conj(xy)(x^p + y^q) + z^r"};
    app.require_subcommand(1);

    long long p = 0, q = 0, r = 0;
    std::string format = "json";
    std::string chi = "literal";

    CLI::App* analyze = app.add_subcommand("analyze", "Analyze one (p, q, r) triple");
    analyze->add_option("--p", p, "exponent p")->required();
    analyze->add_option("--q", q, "exponent q")->required();
    analyze->add_option("--r", r, "exponent r")->required();
    analyze->add_option("--format", format, "json|markdown|dot")
        ->check(CLI::IsMember({"json", "markdown", "dot"}));
    analyze->add_option("--chi-convention", chi, "literal|join|both")
        ->check(CLI::IsMember({"literal", "join", "both"}));

    std::string p_spec, q_spec, r_spec, out_path;
    std::string sweep_format = "json";
    CLI::App* sweep = app.add_subcommand("sweep", "Analyze a grid of triples");
    sweep->add_option("--p", p_spec, "p value or range A..B")->required();
    sweep->add_option("--q", q_spec, "q value or range A..B")->required();
    sweep->add_option("--r", r_spec, "r value or range A..B")->required();
    sweep->add_option("--out", out_path, "output file")->required();
    sweep->add_option("--format", sweep_format, "json|markdown")
        ->check(CLI::IsMember({"json", "markdown"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    if (analyze->parsed()) {
        return run_analyze(p, q, r, format, parse_chi_mode(chi));
    }
    try {
        return run_sweep(parse_range(p_spec), parse_range(q_spec), parse_range(r_spec), out_path,
                         sweep_format);
    } catch (const std::exception&) {
        std::cerr << "error [invalid_range]: ranges must be N or A..B with A <= B\n";
        return kExitInvalid;
    }
}
