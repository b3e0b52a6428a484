#ifndef RCCMERGE_CLI_HPP
#define RCCMERGE_CLI_HPP

#include "rccmerge/io.hpp"
#include "rccmerge/merge.hpp"
#include "rccmerge/select.hpp"
#include "rccmerge/translate.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rccmerge::cli {

struct PipelineConfig {
    std::vector<std::string> inputs;
    std::string profile;
    std::string output;  // empty: standard output
    std::string trace;
    std::string emit_qcn;
    std::string emit_scenarios;
    std::string dot;
    bool json = false;
    bool csv = false;
    std::optional<unsigned> seed;  // reserved
    ForwardMode forward_mode = ForwardMode::Axioms;
    std::vector<std::string> variables;
};

/// Everything the merge command computes, stage by stage.
struct PipelineResult {
    std::vector<ConceptName> vocabulary;
    std::vector<ForwardTranslation> translations;
    MergeResult merge;
    std::vector<Scenario> scenarios;
    Selection selection;
    Ontology merged;
};

/// Union of the sources' concepts in first-occurrence order, or the
/// explicit order when one is given (it must name exactly those concepts).
std::vector<ConceptName> joint_vocabulary(const std::vector<Ontology>& sources,
                                          const std::vector<std::string>& order = {});

/// classify, forward, distance table, merge, scenarios, selection, backward.
PipelineResult run_pipeline(const std::vector<Ontology>& sources, ForwardMode mode = ForwardMode::Axioms,
                            const std::vector<std::string>& order = {});

/// Entry point behind the executable; args excludes the program name.
/// Returns 0 on success, 2 for input errors and 3 for internal errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rccmerge::cli

#endif  // RCCMERGE_CLI_HPP
