#include "earspec/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"

#include "earspec/ear_decomp.hpp"
#include "earspec/extremal.hpp"
#include "earspec/graph.hpp"
#include "earspec/matching.hpp"
#include "earspec/nice_cycle.hpp"
#include "earspec/parallel.hpp"
#include "earspec/spectral.hpp"

namespace earspec {

namespace {

enum class Format { json, tsv, human };

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

std::string json_str(const std::string& s) { return "\"" + json_escape(s) + "\""; }

std::string json_ints(const std::vector<int>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + "]";
}

std::string json_pair(const std::pair<int, int>& e) {
    return "[" + std::to_string(e.first) + "," + std::to_string(e.second) + "]";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

std::string ints_joined(const std::vector<int>& v, const std::string& sep) {
    std::vector<std::string> parts;
    parts.reserve(v.size());
    for (int x : v) parts.push_back(std::to_string(x));
    return join(parts, sep);
}

// --- witness rendering -----------------------------------------------------

std::string witness_json(const Witness& w) {
    if (std::holds_alternative<std::monostate>(w)) return "{\"type\":\"none\"}";
    if (const auto* e = std::get_if<std::pair<int, int>>(&w))
        return "{\"edge\":" + json_pair(*e) + ",\"type\":\"edge\"}";
    if (const auto* v = std::get_if<int>(&w))
        return "{\"type\":\"vertex\",\"vertex\":" + std::to_string(*v) + "}";
    if (const auto* m = std::get_if<Matching>(&w)) {
        std::string edges = "[";
        for (std::size_t i = 0; i < m->edges.size(); ++i) {
            if (i) edges += ",";
            edges += json_pair(m->edges[i]);
        }
        return "{\"edges\":" + edges + "],\"type\":\"matching\"}";
    }
    const auto& c = std::get<CycleChordWitness>(w);
    return "{\"chord\":" + json_pair(c.chord) + ",\"cycle\":" + json_ints(c.cycle) +
           ",\"type\":\"cycle-chord\"}";
}

std::string witness_tsv(const Witness& w) {
    if (std::holds_alternative<std::monostate>(w)) return "-";
    if (const auto* e = std::get_if<std::pair<int, int>>(&w))
        return "edge:" + std::to_string(e->first) + "-" + std::to_string(e->second);
    if (const auto* v = std::get_if<int>(&w)) return "vertex:" + std::to_string(*v);
    if (const auto* m = std::get_if<Matching>(&w)) {
        std::vector<std::string> parts;
        for (auto [a, b] : m->edges) parts.push_back(std::to_string(a) + "-" + std::to_string(b));
        return "matching:" + join(parts, ",");
    }
    const auto& c = std::get<CycleChordWitness>(w);
    return "cycle:" + ints_joined(c.cycle, "-") + ";chord:" + std::to_string(c.chord.first) +
           "-" + std::to_string(c.chord.second);
}

std::string witness_human(const Witness& w) {
    if (std::holds_alternative<std::monostate>(w)) return "";
    if (const auto* e = std::get_if<std::pair<int, int>>(&w))
        return " [edge " + std::to_string(e->first) + "-" + std::to_string(e->second) + "]";
    if (const auto* v = std::get_if<int>(&w)) return " [vertex " + std::to_string(*v) + "]";
    if (const auto* m = std::get_if<Matching>(&w)) {
        std::vector<std::string> parts;
        for (auto [a, b] : m->edges) parts.push_back(std::to_string(a) + "-" + std::to_string(b));
        return " [matching " + join(parts, " ") + "]";
    }
    const auto& c = std::get<CycleChordWitness>(w);
    return " [cycle " + ints_joined(c.cycle, "-") + " chord " + std::to_string(c.chord.first) +
           "-" + std::to_string(c.chord.second) + "]";
}

std::string certificate_line(const std::string& g6, const Certificate& c, Format f) {
    switch (f) {
        case Format::json:
            return "{\"note\":" + json_str(c.note) + ",\"property\":" + json_str(c.property) +
                   ",\"verdict\":" + (c.verdict ? "true" : "false") +
                   ",\"witness\":" + witness_json(c.witness) + "}\n";
        case Format::tsv:
            return g6 + "\t" + c.property + "\t" + (c.verdict ? "true" : "false") + "\t" +
                   c.note + "\t" + witness_tsv(c.witness) + "\n";
        case Format::human:
            return g6 + " " + c.property + ": " + (c.verdict ? "yes" : "no") + " (" + c.note +
                   ")" + witness_human(c.witness) + "\n";
    }
    return {};
}

std::string spectral_line(const std::string& g6, const SpectralResult& r, Format f) {
    switch (f) {
        case Format::json: {
            std::string perron = "[";
            for (std::size_t i = 0; i < r.perron.size(); ++i) {
                if (i) perron += ",";
                perron += num(r.perron[i]);
            }
            return "{\"iterations\":" + std::to_string(r.iterations) + ",\"perron\":" + perron +
                   "],\"residual\":" + num(r.residual) + ",\"rho\":" + num(r.rho) + "}\n";
        }
        case Format::tsv:
            return g6 + "\t" + num(r.rho) + "\t" + std::to_string(r.iterations) + "\t" +
                   num(r.residual) + "\n";
        case Format::human:
            return g6 + " rho=" + num(r.rho) + " iterations=" + std::to_string(r.iterations) +
                   " residual=" + num(r.residual) + "\n";
    }
    return {};
}

std::string error_line(const std::string& g6, const std::string& msg, Format f) {
    switch (f) {
        case Format::json:
            return "{\"error\":" + json_str(msg) + "}\n";
        case Format::tsv:
            return g6 + "\terror\t" + msg + "\n";
        case Format::human:
            return g6 + " error: " + msg + "\n";
    }
    return {};
}

std::string base_graph6(const EarDecomposition& d) {
    Graph b(static_cast<int>(d.base.size()));
    if (d.base.size() == 2) {
        b.add_edge(0, 1);
    } else {
        for (int i = 0; i < b.n; ++i) b.add_edge(i, (i + 1) % b.n);
    }
    return to_graph6(b);
}

std::string decomposition_line(const std::string& g6, const EarDecomposition& d, Format f) {
    std::string kind = d.kind == EarKind::bipartite ? "bipartite" : "odd";
    switch (f) {
        case Format::json: {
            std::string ears = "[";
            for (std::size_t i = 0; i < d.ears.size(); ++i) {
                if (i) ears += ",";
                ears += json_ints(d.ears[i].path);
            }
            return "{\"base\":" + json_str(base_graph6(d)) +
                   ",\"base_vertices\":" + json_ints(d.base) + ",\"ears\":" + ears +
                   "],\"grades\":" + json_ints(d.grades) + ",\"kind\":" + json_str(kind) + "}\n";
        }
        case Format::tsv: {
            std::vector<std::string> ear_parts;
            for (const auto& e : d.ears) ear_parts.push_back(ints_joined(e.path, ","));
            return g6 + "\t" + kind + "\t" + ints_joined(d.base, ",") + "\t" +
                   join(ear_parts, ";") + "\t" + ints_joined(d.grades, ",") + "\n";
        }
        case Format::human: {
            std::string out = g6 + " kind=" + kind + " base=[" + ints_joined(d.base, " ") +
                              "] ears=" + std::to_string(d.ears.size()) + "\n";
            for (std::size_t i = 0; i < d.ears.size(); ++i)
                out += "  ear " + std::to_string(i + 1) + ": " +
                       ints_joined(d.ears[i].path, " ") + " (grade " +
                       std::to_string(d.grades[i + 1]) + ")\n";
            return out;
        }
    }
    return {};
}

std::string report_block(const EnumerationReport& r, Format f) {
    switch (f) {
        case Format::json: {
            std::string argmax = "[";
            for (std::size_t i = 0; i < r.argmax.size(); ++i) {
                if (i) argmax += ",";
                argmax += json_str(r.argmax[i]);
            }
            return "{\"argmax\":" + argmax + "],\"bound\":" + num(r.bound) +
                   ",\"bound_met\":" + (r.bound_met ? "true" : "false") +
                   ",\"class\":" + json_str(r.class_name) +
                   ",\"count\":" + std::to_string(r.count) +
                   ",\"extremal_match\":" + (r.extremal_match ? "true" : "false") +
                   ",\"max_rho\":" + num(r.max_rho) + ",\"n\":" + std::to_string(r.n) + "}\n";
        }
        case Format::tsv:
            return std::to_string(r.n) + "\t" + r.class_name + "\t" + std::to_string(r.count) +
                   "\t" + num(r.max_rho) + "\t" + num(r.bound) + "\t" +
                   (r.bound_met ? "true" : "false") + "\t" +
                   (r.extremal_match ? "true" : "false") + "\t" + join(r.argmax, ",") + "\n";
        case Format::human:
            return "n=" + std::to_string(r.n) + " class=" + r.class_name +
                   " count=" + std::to_string(r.count) + "\n  max rho " + num(r.max_rho) +
                   " vs bound " + num(r.bound) + (r.bound_met ? " (met)" : " (EXCEEDED)") +
                   "\n  maximizer " + join(r.argmax, ", ") +
                   (r.extremal_match ? " matches the expected extremal graph\n"
                                     : " does NOT match the expected extremal graph\n");
    }
    return {};
}

struct InputLine {
    int number = 0;
    std::string text;
};

std::vector<InputLine> read_graph_lines(std::istream& in) {
    std::vector<InputLine> lines;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        std::string text = line.substr(first, last - first + 1);
        if (text[0] == '#') continue;
        lines.push_back({no, text});
    }
    return lines;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"matching covered and factor critical graph toolkit", "earspec"};
    app.fallthrough();
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "tsv", "human"}));
    app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);

    CLI::App* cmd_check =
        app.add_subcommand("check", "evaluate the four certificates for each input graph");
    CLI::App* cmd_rho = app.add_subcommand("rho", "spectral radius of each input graph");

    CLI::App* cmd_gen = app.add_subcommand("gen", "emit a generated family member as graph6");
    std::string family;
    int gen_n = 0;
    cmd_gen->add_option("family", family, "p3star, friendship, or cycle")
        ->required()
        ->check(CLI::IsMember({"p3star", "friendship", "cycle"}));
    cmd_gen->add_option("--n", gen_n, "graph order")->required();

    CLI::App* cmd_dec =
        app.add_subcommand("decompose", "ear decomposition of each input graph");
    std::string kind = "bipartite";
    cmd_dec->add_option("--kind", kind, "decomposition kind")
        ->check(CLI::IsMember({"bipartite", "odd"}));

    CLI::App* cmd_enum = app.add_subcommand("enumerate", "list a graph class at a fixed order");
    std::string klass;
    int enum_n = 0;
    cmd_enum->add_option("--class", klass, "graph class")
        ->required()
        ->check(CLI::IsMember({"mc-bipartite", "factor-critical"}));
    cmd_enum->add_option("--n", enum_n, "graph order")->required();

    CLI::App* cmd_ver =
        app.add_subcommand("verify", "sweep a class and check the spectral bound");
    int theorem = 0;
    int ver_n = 0;
    cmd_ver->add_option("--theorem", theorem, "1 or 2")->required()->check(CLI::Range(1, 2));
    cmd_ver->add_option("--n", ver_n, "graph order")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (const char* t = std::getenv("EARSPEC_TOL")) {
        char* end = nullptr;
        double v = std::strtod(t, &end);
        if (end == t || *end != '\0' || !(v > 0) || !(v < 1)) {
            err << "earspec: EARSPEC_TOL must be a number in (0, 1)\n";
            return 2;
        }
        cfg.tolerance = v;
    }

    Format f = cfg.format == "json" ? Format::json
               : cfg.format == "tsv" ? Format::tsv
                                     : Format::human;

    if (*cmd_gen) {
        try {
            Graph g = family == "p3star"      ? gen_p3star(gen_n)
                      : family == "friendship" ? gen_friendship(gen_n)
                                               : gen_cycle(gen_n);
            out << to_graph6(g) << "\n";
            return 0;
        } catch (const std::invalid_argument& e) {
            err << "earspec: " << e.what() << "\n";
            return 2;
        }
    }

    if (*cmd_enum) {
        try {
            auto members = klass == "mc-bipartite"
                               ? enumerate_minimal_mc_bipartite(enum_n, cfg.jobs)
                               : enumerate_minimal_factor_critical(enum_n, cfg.jobs);
            for (const auto& s : members) out << s << "\n";
            return 0;
        } catch (const std::invalid_argument& e) {
            err << "earspec: " << e.what() << "\n";
            return 2;
        }
    }

    if (*cmd_ver) {
        try {
            EnumerationReport r =
                theorem == 1 ? verify_theorem_1(ver_n, cfg.jobs) : verify_theorem_2(ver_n, cfg.jobs);
            out << report_block(r, f);
            return r.bound_met && r.extremal_match ? 0 : 1;
        } catch (const std::invalid_argument& e) {
            err << "earspec: " << e.what() << "\n";
            return 2;
        }
    }

    // The remaining subcommands consume graph6 lines from the input stream.
    std::vector<InputLine> lines = read_graph_lines(in);
    std::vector<Graph> graphs;
    graphs.reserve(lines.size());
    for (const auto& l : lines) {
        try {
            graphs.push_back(parse_graph6(l.text));
        } catch (const std::invalid_argument& e) {
            err << "earspec: line " << l.number << ": " << e.what() << "\n";
            return 3;
        }
    }

    std::vector<std::string> rendered(graphs.size());

    if (*cmd_check) {
        parallel_for(graphs.size(), cfg.jobs, [&](std::size_t i) {
            const Graph& g = graphs[i];
            std::string block;
            block += certificate_line(lines[i].text, is_matching_covered(g), f);
            block += certificate_line(lines[i].text, is_minimal_matching_covered(g), f);
            block += certificate_line(lines[i].text, is_factor_critical(g), f);
            block += certificate_line(lines[i].text, is_minimal_factor_critical(g), f);
            rendered[i] = std::move(block);
        });
    } else if (*cmd_rho) {
        parallel_for(graphs.size(), cfg.jobs, [&](std::size_t i) {
            try {
                SpectralResult r = spectral_radius(graphs[i], cfg.tolerance);
                rendered[i] = spectral_line(lines[i].text, r, f);
            } catch (const std::exception& e) {
                rendered[i] = error_line(lines[i].text, e.what(), f);
            }
        });
    } else if (*cmd_dec) {
        EarKind k = kind == "bipartite" ? EarKind::bipartite : EarKind::odd;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            try {
                std::optional<EarDecomposition> d =
                    k == EarKind::bipartite ? find_bipartite_ear_decomposition(graphs[i])
                                            : find_odd_ear_decomposition(graphs[i]);
                rendered[i] = d ? decomposition_line(lines[i].text, *d, f)
                                : error_line(lines[i].text, "no-decomposition", f);
            } catch (const std::exception& e) {
                rendered[i] = error_line(lines[i].text, e.what(), f);
            }
        }
    }

    for (const auto& block : rendered) out << block;
    return 0;
}

}  // namespace earspec
