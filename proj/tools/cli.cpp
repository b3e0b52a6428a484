#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace rccmerge::cli {

namespace {

/// Failure attributed to one pipeline stage; code is the exit status.
class StageFailure : public std::runtime_error {
public:
    StageFailure(std::string stage, const std::string& what, int code)
        : std::runtime_error(what), stage_(std::move(stage)), code_(code)
    {
    }
    const std::string& stage() const { return stage_; }
    int code() const { return code_; }

private:
    std::string stage_;
    int code_;
};

template <class F>
auto stage(const char* name, F&& f)
{
    try {
        return f();
    } catch (const StageFailure&) {
        throw;
    } catch (const InputError& e) {
        throw StageFailure(name, e.what(), 2);
    } catch (const std::exception& e) {
        throw StageFailure(name, e.what(), 3);
    }
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw InputError("cannot write '" + path + "'");
    f << content;
    if (!f)
        throw InputError("failed writing '" + path + "'");
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : path_(path), out_(fallback) {}
    std::ostream& stream() { return buffer_; }
    void flush()
    {
        if (path_.empty())
            out_ << buffer_.str();
        else
            write_file(path_, buffer_.str());
    }

private:
    std::string path_;
    std::ostream& out_;
    std::ostringstream buffer_;
};

std::vector<std::string> input_paths(const PipelineConfig& cfg)
{
    std::vector<std::string> paths;
    if (!cfg.profile.empty())
        paths = read_profile(cfg.profile);
    paths.insert(paths.end(), cfg.inputs.begin(), cfg.inputs.end());
    if (paths.empty())
        throw InputError("no input ontologies (use --input or --profile)");
    return paths;
}

struct Sources {
    std::vector<std::string> paths;
    std::vector<Ontology> ontologies;
};

Sources load_sources(const PipelineConfig& cfg)
{
    return stage("load", [&] {
        Sources s;
        s.paths = input_paths(cfg);
        for (const auto& p : s.paths)
            s.ontologies.push_back(load_ontology(p));
        return s;
    });
}

std::string pair_label(const std::string& a, const std::string& b)
{
    return a + "/" + b;
}

/// Pairs (i < j) in variable order, the layout used for tables.
std::vector<std::pair<std::string, std::string>> display_pairs(const std::vector<std::string>& vars)
{
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            out.emplace_back(vars[i], vars[j]);
    return out;
}

std::string pad(const std::string& s, std::size_t width)
{
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

void write_table_text(std::ostream& out, const DistanceTable& table)
{
    auto pairs = display_pairs(table.variables());
    std::vector<std::string> heads;
    std::size_t width = 4;
    for (const auto& [a, b] : pairs) {
        heads.push_back(pair_label(a, b));
        width = std::max(width, heads.back().size() + 2);
    }
    out << "Distance table (rows: base relations, columns: pairs)\n";
    out << std::string(4, ' ');
    for (const auto& h : heads)
        out << pad(h, width);
    out << "\n";
    for (Base b : all_bases) {
        std::string name = to_string(b);
        out << name << std::string(4 - name.size(), ' ');
        for (const auto& [a, c] : pairs)
            out << pad(std::to_string(table.distance(a, c, b)), width);
        out << "\n";
    }
    for (const auto& w : table.warnings())
        out << "warning: " << w << "\n";
}

void write_table_csv(std::ostream& out, const DistanceTable& table)
{
    auto pairs = display_pairs(table.variables());
    out << "relation";
    for (const auto& [a, b] : pairs)
        out << "," << pair_label(a, b);
    out << "\n";
    for (Base b : all_bases) {
        out << to_string(b);
        for (const auto& [a, c] : pairs)
            out << "," << table.distance(a, c, b);
        out << "\n";
    }
}

std::string network_line(const Qcn& n)
{
    std::string out;
    for (const auto& [a, b] : display_pairs(n.variables())) {
        Relation r = n.at(a, b);
        if (r.is_full())
            continue;
        if (!out.empty())
            out += "  ";
        out += pair_label(a, b) + " " + to_string(r);
    }
    for (const auto& v : n.variables())
        if (n.at(v, v).is_empty())
            out += (out.empty() ? "" : "  ") + v + " empty";
    return out.empty() ? "(unconstrained)" : out;
}

void write_explain_text(std::ostream& out, const PipelineResult& r)
{
    write_table_text(out, r.merge.table);
    out << "\nMerge trace\n";
    out << "  initial: " << network_line(r.merge.trace.initial) << "\n";
    out << "  consistent: " << (r.merge.trace.iterations.empty() ? "yes" : "no") << "\n";
    for (std::size_t k = 0; k < r.merge.trace.iterations.size(); ++k) {
        const auto& step = r.merge.trace.iterations[k];
        out << "  iteration " << k + 1 << ": val " << step.val << ", relaxed";
        for (const auto& [a, b] : step.relaxed) {
            auto [x, y] = step.snapshot.index_of(a) < step.snapshot.index_of(b) ? std::make_pair(a, b)
                                                                                  : std::make_pair(b, a);
            out << " " << pair_label(x, y) << " -> " << to_string(step.snapshot.at(x, y));
        }
        out << "\n";
    }
    out << "  merged: " << network_line(r.merge.merged) << "\n";
    out << "\nScenarios\n";
    for (std::size_t k = 0; k < r.scenarios.size(); ++k) {
        out << "  #" << k + 1 << " distance " << pad(std::to_string(r.selection.scores[k].distance), 3)
            << ": " << network_line(r.scenarios[k].network());
        out << "  [per source:";
        for (const auto& src : r.selection.scores[k].sources)
            out << " " << src.total;
        out << "]\n";
    }
    out << "selected: #" << r.selection.index + 1 << " (distance "
        << r.selection.scores[r.selection.index].distance << ")";
    if (r.selection.tie()) {
        out << ", tied with";
        for (std::size_t k : r.selection.tied)
            if (k != r.selection.index)
                out << " #" << k + 1;
    }
    out << "\n";
}

void write_merge_artifacts(const PipelineConfig& cfg, const PipelineResult& r)
{
    if (!cfg.trace.empty())
        write_file(cfg.trace, dump(Json{{"table", to_json(r.merge.table)}, {"trace", to_json(r.merge.trace)}}));
    if (!cfg.emit_qcn.empty())
        write_file(cfg.emit_qcn, dump(to_json(r.merge.merged)));
    if (!cfg.emit_scenarios.empty())
        write_file(cfg.emit_scenarios, dump(scenarios_to_json(r.scenarios, r.selection)));
    if (!cfg.dot.empty())
        write_file(cfg.dot, to_dot(r.merge.merged, "merged"));
}

int cmd_merge(const PipelineConfig& cfg, std::ostream& out, std::ostream& err)
{
    Sources src = load_sources(cfg);
    PipelineResult r = run_pipeline(src.ontologies, cfg.forward_mode, cfg.variables);
    for (const auto& w : r.merge.table.warnings())
        err << "warning: " << w << "\n";
    stage("output", [&] {
        write_merge_artifacts(cfg, r);
        Output o(cfg.output, out);
        if (cfg.json)
            o.stream() << dump(to_json(r.merged));
        else
            o.stream() << to_text(r.merged);
        o.flush();
        return 0;
    });
    return 0;
}

int cmd_explain(const PipelineConfig& cfg, std::ostream& out)
{
    Sources src = load_sources(cfg);
    PipelineResult r = run_pipeline(src.ontologies, cfg.forward_mode, cfg.variables);
    stage("output", [&] {
        write_merge_artifacts(cfg, r);
        Output o(cfg.output, out);
        if (cfg.json) {
            o.stream() << dump(Json{
                {"table", to_json(r.merge.table)},
                {"trace", to_json(r.merge.trace)},
                {"scenarios", scenarios_to_json(r.scenarios, r.selection)},
            });
        } else if (cfg.csv) {
            write_table_csv(o.stream(), r.merge.table);
        } else {
            write_explain_text(o.stream(), r);
        }
        o.flush();
        return 0;
    });
    return 0;
}

int cmd_check(const PipelineConfig& cfg, std::ostream& out)
{
    Sources src = load_sources(cfg);
    Json results = Json::array();
    std::ostringstream text;
    for (std::size_t k = 0; k < src.ontologies.size(); ++k) {
        auto t = stage("forward", [&] { return forward(src.ontologies[k], cfg.forward_mode); });
        bool ok = stage("consistency", [&] { return is_consistent(t.network); });
        Json conflicts = Json::array();
        for (const auto& [a, b] : t.conflicting_pairs)
            conflicts.push_back(Json::array({a, b}));
        Json unsat = Json::array();
        for (const auto& c : t.unsatisfiable)
            unsat.push_back(c.str());
        results.push_back(Json{{"source", src.paths[k]},
                               {"consistent", ok},
                               {"conflicting_pairs", conflicts},
                               {"unsatisfiable", unsat}});
        text << src.paths[k] << ": " << (ok ? "consistent" : "inconsistent");
        for (const auto& [a, b] : t.conflicting_pairs)
            text << "; empty constraint on (" << a << ", " << b << ")";
        for (const auto& c : t.unsatisfiable)
            text << "; concept " << c.str() << " is empty";
        text << "\n";
    }
    stage("output", [&] {
        Output o(cfg.output, out);
        o.stream() << (cfg.json ? dump(results) : text.str());
        o.flush();
        return 0;
    });
    return 0;
}

int cmd_classify(const PipelineConfig& cfg, std::ostream& out)
{
    Sources src = load_sources(cfg);
    Json results = Json::array();
    std::ostringstream text;
    for (std::size_t k = 0; k < src.ontologies.size(); ++k) {
        const Ontology& o = src.ontologies[k];
        auto cls = stage("classify", [&] { return classify(o); });
        auto closed = stage("closure", [&] { return deductive_closure(o, cls); });
        results.push_back(Json{{"source", src.paths[k]}, {"classification", to_json(cls)}, {"closure", to_json(closed)}});
        text << "# " << src.paths[k] << "\n";
        for (const auto& ax : cls.axioms())
            text << to_string(ax) << "\n";
        for (const auto& f : closed.facts)
            text << to_string(Assertion{f}) << "\n";
        for (const auto& r : closed.roles)
            text << to_string(Assertion{r}) << "\n";
        for (const auto& a : closed.inconsistent_individuals)
            text << "# inconsistent individual: " << a.str() << "\n";
    }
    stage("output", [&] {
        Output o(cfg.output, out);
        o.stream() << (cfg.json ? dump(results) : text.str());
        o.flush();
        return 0;
    });
    return 0;
}

int cmd_translate(const PipelineConfig& cfg, const std::string& direction, std::ostream& out, std::ostream& err)
{
    if (direction == "forward") {
        Sources src = load_sources(cfg);
        if (src.ontologies.size() != 1)
            throw StageFailure("load", "translate forward takes exactly one ontology", 2);
        auto t = stage("forward", [&] {
            std::vector<ConceptName> vocab;
            if (!cfg.variables.empty())
                vocab = joint_vocabulary(src.ontologies, cfg.variables);
            return forward(src.ontologies.front(), cfg.forward_mode, vocab);
        });
        for (const auto& ax : t.role_axioms)
            err << "note: role axiom '" << to_string(ax) << "' contributes through classification only\n";
        for (const auto& [a, b] : t.conflicting_pairs)
            err << "warning: empty constraint on (" << a << ", " << b << ")\n";
        stage("output", [&] {
            if (!cfg.dot.empty())
                write_file(cfg.dot, to_dot(t.network));
            Output o(cfg.output, out);
            o.stream() << dump(to_json(t.network));
            o.flush();
            return 0;
        });
        return 0;
    }

    if (cfg.inputs.size() != 1 || !cfg.profile.empty())
        throw StageFailure("load", "translate backward takes exactly one QCN JSON file via --input", 2);
    Qcn net = stage("load", [&] {
        std::ifstream f(cfg.inputs.front());
        if (!f)
            throw InputError("cannot open QCN file '" + cfg.inputs.front() + "'");
        Json j;
        try {
            f >> j;
        } catch (const std::exception& e) {
            throw InputError(cfg.inputs.front() + ": " + e.what());
        }
        return qcn_from_json(j);
    });
    Ontology o = stage("backward", [&] {
        Scenario s = [&] {
            try {
                return Scenario(net);
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
        }();
        return backward(s);
    });
    stage("output", [&] {
        Output w(cfg.output, out);
        w.stream() << (cfg.json ? dump(to_json(o)) : to_text(o));
        w.flush();
        return 0;
    });
    return 0;
}

void add_common(CLI::App* cmd, PipelineConfig& cfg, bool with_profile = true)
{
    cmd->add_option("-i,--input", cfg.inputs, "Input file (repeatable)");
    if (with_profile)
        cmd->add_option("-p,--profile", cfg.profile, "File listing ontology paths, one per line");
    cmd->add_option("-o,--output", cfg.output, "Output file (default: standard output)");
    cmd->add_flag("--json", cfg.json, "Emit JSON");
}

void add_forward_mode(CLI::App* cmd, std::string& mode)
{
    cmd->add_option("--forward", mode, "Forward translation: axioms (default) or closure")
        ->check(CLI::IsMember({"axioms", "closure"}));
}

void add_artifacts(CLI::App* cmd, PipelineConfig& cfg)
{
    cmd->add_option("--trace", cfg.trace, "Write the distance table and merge trace as JSON");
    cmd->add_option("--emit-qcn", cfg.emit_qcn, "Write the merged QCN as JSON");
    cmd->add_option("--emit-scenarios", cfg.emit_scenarios, "Write the scenarios and their scores as JSON");
    cmd->add_option("--dot", cfg.dot, "Write the merged QCN in Graphviz format");
    cmd->add_option("--seed", cfg.seed, "Reserved; currently unused");
    cmd->add_option("--variables", cfg.variables, "Variable order for tables, comma separated")->delimiter(',');
}

}  // namespace

std::vector<ConceptName> joint_vocabulary(const std::vector<Ontology>& sources, const std::vector<std::string>& order)
{
    std::vector<ConceptName> vocab;
    for (const auto& o : sources)
        for (const auto& c : o.concepts())
            if (std::find(vocab.begin(), vocab.end(), c) == vocab.end())
                vocab.push_back(c);
    if (order.empty())
        return vocab;

    std::vector<ConceptName> ordered;
    for (const auto& v : order) {
        ConceptName c{v};
        if (std::find(ordered.begin(), ordered.end(), c) != ordered.end())
            throw InputError("variable '" + v + "' is listed twice");
        if (std::find(vocab.begin(), vocab.end(), c) == vocab.end())
            throw InputError("variable '" + v + "' is not a concept of the inputs");
        ordered.push_back(c);
    }
    for (const auto& c : vocab)
        if (std::find(ordered.begin(), ordered.end(), c) == ordered.end())
            throw InputError("variable order does not mention concept '" + c.str() + "'");
    return ordered;
}

PipelineResult run_pipeline(const std::vector<Ontology>& sources, ForwardMode mode, const std::vector<std::string>& order)
{
    PipelineResult r;
    r.vocabulary = stage("vocabulary", [&] { return joint_vocabulary(sources, order); });
    std::vector<Qcn> profile;
    for (const auto& o : sources) {
        r.translations.push_back(stage("forward", [&] { return forward(o, mode, r.vocabulary); }));
        profile.push_back(r.translations.back().network);
    }
    r.merge = stage("merge", [&] { return merge(DistanceTable(profile)); });
    r.scenarios = stage("scenarios", [&] { return enumerate_scenarios(r.merge.merged); });
    if (r.scenarios.empty())
        throw StageFailure("scenarios", "merged network has no scenario", 3);
    r.selection = stage("select", [&] { return select_scenario(r.scenarios, sources); });
    r.merged = stage("backward", [&] {
        FreshNamePool pool;
        for (const auto& o : sources)
            pool.reserve(o.signature());
        return backward(r.scenarios[r.selection.index], pool);
    });
    return r;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Merge conflicting EL ontologies through RCC-5 constraint networks", "rccmerge"};
    app.require_subcommand(1);

    PipelineConfig cfg;
    std::string mode = "axioms";
    std::string direction;

    auto* merge_cmd = app.add_subcommand("merge", "Merge the input ontologies and print the result");
    add_common(merge_cmd, cfg);
    add_forward_mode(merge_cmd, mode);
    add_artifacts(merge_cmd, cfg);

    auto* explain_cmd = app.add_subcommand("explain", "Print the distance table, merge trace and scenario scores");
    add_common(explain_cmd, cfg);
    add_forward_mode(explain_cmd, mode);
    add_artifacts(explain_cmd, cfg);
    explain_cmd->add_flag("--csv", cfg.csv, "Print only the distance table as CSV");

    auto* check_cmd = app.add_subcommand("check", "Decide whether each input has a model with no empty concept");
    add_common(check_cmd, cfg);
    add_forward_mode(check_cmd, mode);

    auto* classify_cmd = app.add_subcommand("classify", "Print atomic consequences and the closed ABox of each input");
    add_common(classify_cmd, cfg);

    auto* translate_cmd = app.add_subcommand("translate", "Translate an ontology to a QCN or a scenario to an ontology");
    translate_cmd->add_option("direction", direction, "forward or backward")
        ->required()
        ->check(CLI::IsMember({"forward", "backward"}));
    add_common(translate_cmd, cfg);
    add_forward_mode(translate_cmd, mode);
    translate_cmd->add_option("--dot", cfg.dot, "Also write the QCN in Graphviz format (forward)");
    translate_cmd->add_option("--variables", cfg.variables, "Variable order, comma separated")->delimiter(',');

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.forward_mode = parse_forward_mode(mode);
        if (merge_cmd->parsed())
            return cmd_merge(cfg, out, err);
        if (explain_cmd->parsed())
            return cmd_explain(cfg, out);
        if (check_cmd->parsed())
            return cmd_check(cfg, out);
        if (classify_cmd->parsed())
            return cmd_classify(cfg, out);
        return cmd_translate(cfg, direction, out, err);
    } catch (const StageFailure& e) {
        err << "rccmerge: " << e.stage() << ": " << e.what() << "\n";
        return e.code();
    } catch (const std::exception& e) {
        err << "rccmerge: internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace rccmerge::cli
