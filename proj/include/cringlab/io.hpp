#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "cringlab/entwining.hpp"
#include "json.hpp"

namespace cringlab {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownReference : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShapeMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EntwiningValue {
    RightWeakEntwining right;
    std::optional<LeftWeakEntwining> left;

    bool invertible() const { return left.has_value(); }
    InvertibleWeakEntwining pair() const { return InvertibleWeakEntwining{right, left.value()}; }
};

struct EntwinedModuleValue {
    std::string entwining;
    WeakEntwinedModule module;
};

struct ModuleValue {
    std::string ring;  // a cring, or a context standing for its matrix C-ring
    RightModule module;
};

struct GaloisBaseValue {
    std::string context;
    GaloisBase base;
};

using Value = std::variant<CoalgebraPtr, AlgebraPtr, Comodule, CoalgebraMap, MatrixRingContext, CRingPtr, ModuleValue,
                           EntwiningValue, EntwinedModuleValue, GaloisBaseValue>;

struct Entry {
    std::string name;
    std::string kind;
    Value value;
    nlohmann::ordered_json json;
};

/// Named objects over one field, in definition order. Every adder validates
/// its references and shapes and records the canonical JSON of the object.
class Document {
public:
    explicit Document(Field field = Field::rationals(), std::string description = {});

    Field field() const { return field_; }
    const std::string& description() const { return description_; }
    const std::vector<Entry>& entries() const { return entries_; }
    const Entry& entry(const std::string& name) const;
    bool contains(const std::string& name) const { return index_.count(name) != 0; }
    /// Names of all entries of a kind, in order.
    std::vector<std::string> names(const std::string& kind) const;

    template <class T>
    const T& get(const std::string& name) const
    {
        const Entry& e = entry(name);
        if (const T* v = std::get_if<T>(&e.value)) return *v;
        throw UnknownReference("'" + name + "' is a " + e.kind + " and cannot be used here");
    }
    /// A cring entry, or the matrix C-ring of a context entry.
    CRingPtr ring(const std::string& name) const;

    void add_coalgebra(const std::string& name, CoalgebraPtr c);
    void add_algebra(const std::string& name, AlgebraPtr a);
    struct Side {
        std::string coalgebra;
        Matrix coaction;
    };
    void add_comodule(const std::string& name, FinSpace space, std::optional<Side> left, std::optional<Side> right);
    void add_map(const std::string& name, const std::string& source, const std::string& target, Matrix map);
    void add_context(const std::string& name, const std::string& c, const std::string& d, const std::string& n,
                     const std::string& m, Matrix sigma, Matrix tau);
    /// `mult` on the ambient A⊗A of the carrier.
    void add_cring(const std::string& name, const std::string& coalgebra, const std::string& carrier, Matrix mult, Matrix unit);
    /// `action` on the ambient M⊗A.
    void add_module(const std::string& name, const std::string& ring, const std::string& comodule, Matrix action);
    void add_entwining(const std::string& name, const std::string& algebra, const std::string& coalgebra, Matrix psi_right,
                       std::optional<Matrix> psi_left);
    void add_entwined_module(const std::string& name, const std::string& entwining, FinSpace space, Matrix action,
                             Matrix coaction);
    /// π: E → target, with E the coendomorphism coalgebra of the context.
    void add_galois_base(const std::string& name, const std::string& context, const std::string& target, Matrix pi);

private:
    void put(const std::string& name, std::string kind, Value value, nlohmann::ordered_json json);

    Field field_;
    std::string description_;
    std::vector<Entry> entries_;
    std::map<std::string, std::size_t> index_;
    mutable std::map<std::string, CRingPtr> context_rings_;
};

nlohmann::ordered_json matrix_to_json(const Matrix& m);
/// Sparse {"rows", "cols", "entries": [[i, j, "v"], ...]} or a dense array of rows.
Matrix matrix_from_json(const nlohmann::ordered_json& j, Field f, const std::string& where);

nlohmann::ordered_json to_json(const Document& doc);
/// Pretty-printed JSON with a trailing newline.
std::string emit(const Document& doc);
/// Throws ParseError (with line/column for syntax errors), UnknownReference or
/// ShapeMismatch. `field` overrides the field declared in the document.
Document parse_document(const std::string& text, const std::string& source = "<input>",
                        std::optional<Field> field = std::nullopt);
Document load(const std::string& path, std::optional<Field> field = std::nullopt);

/// Structural axioms of every object, with check names prefixed by the object name.
Report validate(const Document& doc);
Report validate(const Document& doc, const std::string& name);

}  // namespace cringlab
