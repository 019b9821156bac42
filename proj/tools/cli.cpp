#include "cli.hpp"

#include "linked/error.hpp"
#include "linked/oracle.hpp"
#include "linked/profile_io.hpp"
#include "linked/recognition.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

namespace linked::cli {

namespace {

ProfileFormat resolve_format(const std::string& format, const std::string& path) {
    if (format == "native")
        return ProfileFormat::Native;
    if (format == "soc")
        return ProfileFormat::Soc;
    const bool soc = path.size() >= 4 && path.compare(path.size() - 4, 4, ".soc") == 0;
    return soc ? ProfileFormat::Soc : ProfileFormat::Native;
}

// m=1 has no top-two pairs; its graph is the single vertex.
ConnectivityGraph graph_for(const Election& e, ConnectivityMode mode) {
    if (e.m() == 1)
        return ConnectivityGraph::from_edges(1, {}, mode);
    return build_graph(e, mode);
}

std::string join_names(const Election& e, const std::vector<CandidateId>& ids, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i)
            out += sep;
        out += e.name(ids[i]);
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        fail(ErrorKind::IoError, "cannot write '" + path + "'");
    f << text;
    if (!f)
        fail(ErrorKind::IoError, "error writing '" + path + "'");
}

struct CheckArgs {
    std::string path;
    std::string mode = "strong";
    std::string format = "auto";
    bool witness = false;
    bool json = false;
    std::string graph_out;
    unsigned threads = 1;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
    const auto mode = parse_mode(a.mode);
    const Election e = parse_profile(read_file(a.path), resolve_format(a.format, a.path));

    const auto start = std::chrono::steady_clock::now();
    const ConnectivityGraph g = graph_for(e, mode);
    RecognizeOptions opts;
    opts.threads = a.threads;
    const RecognitionResult r = recognize(g, opts);
    const double elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (!a.graph_out.empty())
        write_text_file(a.graph_out, export_dot(g, e.names()));

    std::size_t max_stuck = 0;
    for (const auto& s : r.certificate)
        max_stuck = std::max(max_stuck, s.reached.size());

    if (a.json) {
        nlohmann::ordered_json j;
        j["input"] = a.path;
        j["mode"] = std::string(to_string(mode));
        j["m"] = e.m();
        j["n"] = e.n();
        j["edges"] = g.edge_count();
        j["verdict"] = r.linked() ? "linked" : "not_linked";
        if (r.linked()) {
            nlohmann::ordered_json w = nlohmann::ordered_json::array();
            for (CandidateId c : r.witness->order)
                w.push_back(e.name(c));
            j["witness"] = std::move(w);
        } else {
            j["witness"] = nullptr;
        }
        j["elapsed_ms"] = elapsed_ms;
        out << j.dump() << '\n';
    } else {
        out << "input: " << a.path << '\n'
            << "mode: " << to_string(mode) << '\n'
            << "candidates: " << e.m() << '\n'
            << "votes: " << e.n() << '\n'
            << "edges: " << g.edge_count() << '\n'
            << "verdict: " << (r.linked() ? "LINKED" : "NOT LINKED") << '\n';
        if (r.linked()) {
            if (a.witness)
                out << "witness: " << join_names(e, r.witness->order, " > ") << '\n';
        } else {
            out << "seeds tried: " << r.certificate.size() << '\n' << "max stuck set: " << max_stuck << '\n';
            if (a.witness) {
                for (const auto& s : r.certificate)
                    out << "stuck {" << e.name(s.seed.first) << ", " << e.name(s.seed.second)
                        << "}: " << join_names(e, s.reached, " ") << '\n';
            }
        }
        out << "elapsed_ms: " << elapsed_ms << '\n';
    }
    return r.linked() ? exit_linked : exit_not_linked;
}

struct GenArgs {
    std::string model;
    std::optional<std::size_t> candidates;
    std::optional<std::uint64_t> votes;
    std::string graph;
    std::uint64_t seed = 0;
    std::string out_path;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    std::optional<Election> e;
    if (a.model == "ic") {
        if (!a.graph.empty())
            fail(ErrorKind::InvalidArgument, "--graph only applies to --model edges");
        if (!a.candidates || *a.candidates == 0)
            fail(ErrorKind::InvalidArgument, "--model ic needs --candidates >= 1");
        e = gen_impartial_culture(*a.candidates, a.votes.value_or(0), a.seed);
    } else {
        if (a.graph.empty())
            fail(ErrorKind::InvalidArgument, "--model edges needs --graph");
        if (a.votes)
            fail(ErrorKind::InvalidArgument, "--votes only applies to --model ic");
        GraphInput in = parse_graph_input(read_file(a.graph), a.candidates.value_or(0));
        if (a.candidates && *a.candidates != in.graph.m())
            fail(ErrorKind::InvalidArgument, "--candidates " + std::to_string(*a.candidates) + " conflicts with the graph's " +
                                                 std::to_string(in.graph.m()) + " vertices");
        e = gen_edge_realizing(in.graph, std::move(in.names));
    }
    const std::string text = write_native(*e);
    if (a.out_path.empty())
        out << text;
    else
        write_text_file(a.out_path, text);
    return 0;
}

struct OracleArgs {
    std::string path;
    std::string mode = "strong";
    std::string format = "auto";
    std::size_t cap = default_oracle_cap;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
    const auto mode = parse_mode(a.mode);
    const Election e = parse_profile(read_file(a.path), resolve_format(a.format, a.path));
    if (e.m() > a.cap)
        fail(ErrorKind::InstanceTooLarge,
             "profile has " + std::to_string(e.m()) + " candidates, oracle cap is " + std::to_string(a.cap));
    const ConnectivityGraph g = graph_for(e, mode);
    const RecognitionResult fast = recognize(g);
    const BruteForceResult slow = brute_force_linked(g, a.cap);

    std::string problem;
    if (fast.linked() != slow.linked)
        problem = std::string("recognize says ") + std::string(to_string(fast.verdict)) + ", brute force says " +
                  (slow.linked ? "linked" : "not linked");
    else if (fast.linked() && !verify_witness(g, *fast.witness))
        problem = "recognize witness fails verification";
    else if (slow.linked && !verify_witness(g, *slow.witness))
        problem = "brute-force witness fails verification";

    if (!problem.empty()) {
        out << "DISAGREEMENT: " << problem << '\n';
        return exit_disagreement;
    }
    out << "AGREE: " << to_string(fast.verdict) << '\n';
    if (fast.linked())
        out << "recognize witness: " << join_names(e, fast.witness->order, " > ") << '\n'
            << "brute-force witness: " << join_names(e, slow.witness->order, " > ") << '\n';
    return 0;
}

// ---- graph input ----

struct DotToken {
    enum Kind { Name, Dash, Semi, Open, Close, End } kind;
    std::string text;
    std::size_t line;
};

std::vector<DotToken> tokenize_dot(std::string_view text) {
    std::vector<DotToken> tokens;
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
        } else if (c == '{') {
            tokens.push_back({DotToken::Open, "{", line});
            ++i;
        } else if (c == '}') {
            tokens.push_back({DotToken::Close, "}", line});
            ++i;
        } else if (c == ';') {
            tokens.push_back({DotToken::Semi, ";", line});
            ++i;
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
            tokens.push_back({DotToken::Dash, "--", line});
            i += 2;
        } else if (c == '"') {
            std::string name;
            ++i;
            while (i < text.size() && text[i] != '"') {
                if (text[i] == '\\' && i + 1 < text.size())
                    ++i;
                if (text[i] == '\n')
                    ++line;
                name += text[i++];
            }
            if (i >= text.size())
                fail(ErrorKind::SyntaxError, "unterminated string", line);
            ++i;
            tokens.push_back({DotToken::Name, std::move(name), line});
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
            std::string name;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' || text[i] == '.'))
                name += text[i++];
            tokens.push_back({DotToken::Name, std::move(name), line});
        } else {
            fail(ErrorKind::SyntaxError, std::string("unexpected character '") + c + "' in DOT input", line);
        }
    }
    tokens.push_back({DotToken::End, "", line});
    return tokens;
}

std::optional<CandidateId> as_id(const std::string& s) {
    CandidateId v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0)
        return std::nullopt;
    return v;
}

GraphInput parse_dot(std::string_view text) {
    const auto tokens = tokenize_dot(text);
    std::size_t pos = 0;
    auto expect = [&](DotToken::Kind kind, const char* what) -> const DotToken& {
        if (tokens[pos].kind != kind)
            fail(ErrorKind::SyntaxError, std::string("expected ") + what + " in DOT input", tokens[pos].line);
        return tokens[pos++];
    };
    if (tokens[pos].kind == DotToken::Name && tokens[pos].text == "strict")
        ++pos;
    if (tokens[pos].kind != DotToken::Name || tokens[pos].text != "graph")
        fail(ErrorKind::SyntaxError, "DOT input must start with 'graph'", tokens[pos].line);
    ++pos;
    if (tokens[pos].kind == DotToken::Name)
        ++pos; // graph id
    expect(DotToken::Open, "'{'");

    std::vector<std::string> order;
    std::map<std::string, CandidateId> index;
    auto vertex = [&](const std::string& name) {
        auto [it, inserted] = index.emplace(name, static_cast<CandidateId>(order.size()));
        if (inserted)
            order.push_back(name);
        return it->second;
    };
    std::vector<Edge> edges;
    while (tokens[pos].kind != DotToken::Close) {
        if (tokens[pos].kind == DotToken::Semi) {
            ++pos;
            continue;
        }
        CandidateId prev = vertex(expect(DotToken::Name, "a node name").text);
        while (tokens[pos].kind == DotToken::Dash) {
            ++pos;
            const CandidateId next = vertex(expect(DotToken::Name, "a node name after '--'").text);
            edges.emplace_back(prev, next);
            prev = next;
        }
    }
    ++pos;
    if (tokens[pos].kind != DotToken::End)
        fail(ErrorKind::SyntaxError, "trailing content after DOT graph", tokens[pos].line);

    // Purely numeric node names are taken as candidate ids.
    const bool numeric = std::all_of(order.begin(), order.end(), [](const std::string& s) { return as_id(s).has_value(); });
    GraphInput in;
    if (numeric && !order.empty()) {
        CandidateId max_id = 0;
        for (const auto& s : order)
            max_id = std::max(max_id, *as_id(s));
        std::vector<Edge> by_id;
        for (auto [u, v] : edges)
            by_id.emplace_back(*as_id(order[static_cast<std::size_t>(u)]), *as_id(order[static_cast<std::size_t>(v)]));
        in.graph = ConnectivityGraph::from_edges(static_cast<std::size_t>(max_id) + 1, by_id);
    } else {
        in.graph = ConnectivityGraph::from_edges(order.size(), edges);
        in.names = order;
    }
    return in;
}

GraphInput parse_edge_list(std::string_view text, std::size_t min_vertices) {
    std::vector<Edge> edges;
    std::size_t m = min_vertices;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        ++line_no;
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        const std::string line = trim(text.substr(start, end - start));
        start = end + 1;
        if (!line.empty() && line.front() != '#') {
            const auto space = line.find_first_of(" \t");
            const auto u = space == std::string::npos ? std::nullopt : as_id(line.substr(0, space));
            const auto v = space == std::string::npos ? std::nullopt : as_id(trim(line.substr(space)));
            if (!u || !v)
                fail(ErrorKind::SyntaxError, "expected '<u> <v>' with 0-based ids", line_no);
            edges.emplace_back(*u, *v);
            m = std::max({m, static_cast<std::size_t>(*u) + 1, static_cast<std::size_t>(*v) + 1});
        }
        if (end == text.size())
            break;
    }
    return {ConnectivityGraph::from_edges(m, edges), {}};
}

} // namespace

GraphInput parse_graph_input(std::string_view text, std::size_t min_vertices) {
    const std::string head = trim(text.substr(0, std::min<std::size_t>(text.size(), 64)));
    if (head.rfind("graph", 0) == 0 || head.rfind("strict", 0) == 0)
        return parse_dot(text);
    return parse_edge_list(text, min_vertices);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linked-domain recognition for preference profiles", "linked"};
    app.require_subcommand(1);

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Decide whether a profile is linked");
    check_cmd->add_option("path", check.path, "Profile file")->required();
    check_cmd->add_option("--mode", check.mode, "strong or weak connectivity")->check(CLI::IsMember({"strong", "weak"}));
    check_cmd->add_option("--format", check.format, "native, soc or auto (by extension)")
        ->check(CLI::IsMember({"native", "soc", "auto"}));
    check_cmd->add_flag("--witness", check.witness, "Print the linked order, or every stuck set when not linked");
    check_cmd->add_flag("--json", check.json, "Single-line JSON report");
    check_cmd->add_option("--graph-out", check.graph_out, "Write the connectivity graph as DOT");
    check_cmd->add_option("--threads", check.threads, "Seed worker threads (0 = all cores)");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a native-format profile");
    gen_cmd->add_option("--model", gen.model, "ic or edges")->required()->check(CLI::IsMember({"ic", "edges"}));
    gen_cmd->add_option("--candidates", gen.candidates, "Candidate count");
    gen_cmd->add_option("--votes", gen.votes, "Vote count (ic)");
    gen_cmd->add_option("--graph", gen.graph, "Edge list or DOT file (edges)");
    gen_cmd->add_option("--seed", gen.seed, "RNG seed");
    gen_cmd->add_option("--out", gen.out_path, "Output file (default stdout)");

    OracleArgs oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check recognition against brute force");
    oracle_cmd->add_option("path", oracle.path, "Profile file")->required();
    oracle_cmd->add_option("--mode", oracle.mode, "strong or weak connectivity")->check(CLI::IsMember({"strong", "weak"}));
    oracle_cmd->add_option("--format", oracle.format, "native, soc or auto (by extension)")
        ->check(CLI::IsMember({"native", "soc", "auto"}));
    oracle_cmd->add_option("--cap", oracle.cap, "Largest candidate count brute force accepts");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& s : args)
        argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : exit_error;
    }

    try {
        if (check_cmd->parsed())
            return cmd_check(check, out);
        if (gen_cmd->parsed())
            return cmd_gen(gen, out);
        return cmd_oracle(oracle, out);
    } catch (const LinkedError& e) {
        for (const auto& d : e.diagnostics())
            err << "error: " << format_diagnostic(d) << '\n';
        return exit_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
}

} // namespace linked::cli
