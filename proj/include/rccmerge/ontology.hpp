#ifndef RCCMERGE_ONTOLOGY_HPP
#define RCCMERGE_ONTOLOGY_HPP

#include <compare>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rccmerge {

/// Identifier in one of the three EL name spaces. The tag keeps concept,
/// role and individual names from being mixed up at compile time.
template <class Tag>
struct Name {
    std::string value;

    Name() = default;
    explicit Name(std::string v) : value(std::move(v)) {}

    const std::string& str() const { return value; }
    auto operator<=>(const Name&) const = default;
};

struct ConceptTag {};
struct RoleTag {};
struct IndividualTag {};

using ConceptName = Name<ConceptTag>;
using RoleName = Name<RoleTag>;
using IndividualName = Name<IndividualTag>;

/// Letters, digits and underscore; non-empty.
bool is_valid_identifier(std::string_view s);

// ---------------------------------------------------------------------------
// TBox axioms in strict normal form

/// sub ⊑ sup
struct Subsumption {
    ConceptName sub, sup;
    auto operator<=>(const Subsumption&) const = default;
};

/// first ⊓ second ⊑ ⊥, stored with first <= second.
struct Disjointness {
    ConceptName first, second;
    auto operator<=>(const Disjointness&) const = default;
};

/// sub ⊑ ∃role.filler
struct ExistsRight {
    ConceptName sub;
    RoleName role;
    ConceptName filler;
    auto operator<=>(const ExistsRight&) const = default;
};

/// ∃role.filler ⊑ sup
struct ExistsLeft {
    RoleName role;
    ConceptName filler;
    ConceptName sup;
    auto operator<=>(const ExistsLeft&) const = default;
};

using Axiom = std::variant<Subsumption, Disjointness, ExistsRight, ExistsLeft>;

Disjointness make_disjointness(ConceptName a, ConceptName b);
bool is_role_axiom(const Axiom& ax);

// ---------------------------------------------------------------------------
// ABox assertions

struct ConceptAssertion {
    ConceptName concept_name;
    IndividualName individual;
    auto operator<=>(const ConceptAssertion&) const = default;
};

struct RoleAssertion {
    RoleName role;
    IndividualName subject, object;
    auto operator<=>(const RoleAssertion&) const = default;
};

using Assertion = std::variant<ConceptAssertion, RoleAssertion>;

// ---------------------------------------------------------------------------

/// Base class of everything that is the caller's fault: bad syntax, axioms
/// outside the normal form, name-space clashes, unreadable files.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SignatureError : public InputError {
public:
    using InputError::InputError;
};

struct Signature {
    std::vector<ConceptName> concepts;  // first-occurrence order
    std::vector<RoleName> roles;
    std::vector<IndividualName> individuals;

    bool has_concept(const ConceptName& c) const;
    bool has_role(const RoleName& r) const;
    bool has_individual(const IndividualName& a) const;
};

/// An EL⊥ ontology in strict normal form. Axioms and assertions keep their
/// insertion order (duplicates dropped) so that text output is stable;
/// equality is set equality.
class Ontology {
public:
    Ontology() = default;

    /// Throws SignatureError if a name is used in two name spaces.
    Ontology(std::vector<Axiom> tbox, std::vector<Assertion> abox,
             std::vector<ConceptName> extra_concepts = {});

    const std::vector<Axiom>& tbox() const { return tbox_; }
    const std::vector<Assertion>& abox() const { return abox_; }
    const Signature& signature() const { return signature_; }
    const std::vector<ConceptName>& concepts() const { return signature_.concepts; }

    std::vector<ConceptAssertion> concept_assertions() const;
    std::vector<RoleAssertion> role_assertions() const;

    std::set<Axiom> tbox_set() const { return {tbox_.begin(), tbox_.end()}; }
    std::set<Assertion> abox_set() const { return {abox_.begin(), abox_.end()}; }

    friend bool operator==(const Ontology& a, const Ontology& b);

private:
    void note_concept(const ConceptName& c);
    void note_role(const RoleName& r);
    void note_individual(const IndividualName& a);

    std::vector<Axiom> tbox_;
    std::vector<Assertion> abox_;
    Signature signature_;
};

// ---------------------------------------------------------------------------
// Text grammar

/// Malformed line. line/column are 1-based.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    /// Same error, located in a named file.
    ParseError(const std::string& source, const ParseError& inner);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& detail() const { return detail_; }

private:
    std::size_t line_, column_;
    std::string detail_;
};

/// Well-formed EL⊥ axiom that is not one of the four strict normal forms.
class NormalFormError : public InputError {
public:
    NormalFormError(std::size_t line, const std::string& what);
    NormalFormError(const std::string& source, const NormalFormError& inner);
    std::size_t line() const { return line_; }
    const std::string& detail() const { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

Ontology parse_ontology(std::string_view text);
Ontology load_ontology(const std::string& path);

/// Reads a profile file: one ontology path per line, '#' comments, paths
/// relative to the profile's directory.
std::vector<std::string> read_profile(const std::string& path);

std::string to_string(const Axiom& ax);
std::string to_string(const Assertion& as);

/// Emits the ontology in the text grammar accepted by parse_ontology.
std::string to_text(const Ontology& o);

}  // namespace rccmerge

#endif  // RCCMERGE_ONTOLOGY_HPP
