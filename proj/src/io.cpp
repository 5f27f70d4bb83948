#include "cringlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cringlab {

using nlohmann::ordered_json;

namespace {

template <class F>
auto building(const std::string& name, F&& make)
{
    try {
        return make();
    }
    catch (const ShapeMismatch&) {
        throw;
    }
    catch (const UnknownReference&) {
        throw;
    }
    catch (const std::exception& e) {
        throw ShapeMismatch("object '" + name + "': " + e.what());
    }
}

ordered_json labels_json(const FinSpace& s)
{
    ordered_json out = ordered_json::array();
    for (const auto& l : s.labels) out.push_back(l);
    return out;
}

ordered_json field_json(Field f)
{
    if (!f.is_prime()) return "rationals";
    ordered_json out = ordered_json::object();
    out["prime"] = f.characteristic();
    return out;
}

ordered_json side_json(const Document::Side& s)
{
    ordered_json out = ordered_json::object();
    out["coalgebra"] = s.coalgebra;
    out["coaction"] = matrix_to_json(s.coaction);
    return out;
}

ordered_json header(const std::string& name, const std::string& kind)
{
    ordered_json out = ordered_json::object();
    out["name"] = name;
    out["kind"] = kind;
    return out;
}

// Arrays of scalars stay on one line; everything else is indented.
void print(std::ostream& os, const ordered_json& j, int depth)
{
    auto pad = [&](int d) { return std::string(static_cast<std::size_t>(2 * d), ' '); };
    if (j.is_object()) {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            os << pad(depth + 1) << ordered_json(it.key()).dump() << ": ";
            print(os, it.value(), depth + 1);
            os << (i + 1 < j.size() ? ",\n" : "\n");
        }
        os << pad(depth) << "}";
        return;
    }
    if (j.is_array()) {
        bool flat = std::all_of(j.begin(), j.end(), [](const ordered_json& x) { return x.is_primitive(); });
        if (flat) {
            os << "[";
            for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
            os << "]";
            return;
        }
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            os << pad(depth + 1);
            print(os, j[i], depth + 1);
            os << (i + 1 < j.size() ? ",\n" : "\n");
        }
        os << pad(depth) << "]";
        return;
    }
    os << j.dump();
}

const ordered_json& member(const ordered_json& o, const char* key, const std::string& where)
{
    auto it = o.find(key);
    if (it == o.end()) throw ParseError(where + ": missing '" + key + "'");
    return *it;
}

std::string text(const ordered_json& o, const char* key, const std::string& where)
{
    const ordered_json& v = member(o, key, where);
    if (!v.is_string()) throw ParseError(where + "." + key + ": expected a string");
    return v.get<std::string>();
}

FinSpace basis(const ordered_json& o, const std::string& name, const std::string& where)
{
    const ordered_json& v = member(o, "basis", where);
    if (!v.is_array()) throw ParseError(where + ".basis: expected an array of labels");
    FinSpace s{name, {}};
    for (const auto& l : v) {
        if (!l.is_string()) throw ParseError(where + ".basis: labels must be strings");
        s.labels.push_back(l.get<std::string>());
    }
    try {
        require_distinct_labels(s);
    }
    catch (const ShapeError& e) {
        throw ParseError(where + ".basis: " + e.what());
    }
    return s;
}

Scalar scalar(const ordered_json& v, Field f, const std::string& where)
{
    if (v.is_number_integer()) return Scalar(v.get<long long>()).in(f);
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        try {
            return Scalar::parse(s, f);
        }
        catch (const std::exception& e) {
            throw ParseError(where + ": bad scalar \"" + s + "\" (" + e.what() + ")");
        }
    }
    throw ParseError(where + ": scalars must be integers or \"num/den\" strings, got " + v.dump());
}

Field parse_field(const ordered_json& v, const std::string& where)
{
    if (v.is_string()) {
        try {
            return Field::parse(v.get<std::string>());
        }
        catch (const std::exception& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (v.is_object() && v.contains("prime") && v["prime"].is_number_unsigned()) {
        try {
            return Field::prime(v["prime"].get<std::uint32_t>());
        }
        catch (const std::exception& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    throw ParseError(where + ": expected \"rationals\" or {\"prime\": p}");
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        }
        else {
            ++col;
        }
    }
    return {line, col};
}

std::optional<Document::Side> side(const ordered_json& o, const char* key, Field f, const std::string& where)
{
    auto it = o.find(key);
    if (it == o.end() || it->is_null()) return std::nullopt;
    std::string w = where + "." + key;
    return Document::Side{text(*it, "coalgebra", w), matrix_from_json(member(*it, "coaction", w), f, w + ".coaction")};
}

}  // namespace

Document::Document(Field field, std::string description) : field_(field), description_(std::move(description)) {}

const Entry& Document::entry(const std::string& name) const
{
    auto it = index_.find(name);
    if (it == index_.end()) throw UnknownReference("no object named '" + name + "'");
    return entries_[it->second];
}

std::vector<std::string> Document::names(const std::string& kind) const
{
    std::vector<std::string> out;
    for (const auto& e : entries_)
        if (e.kind == kind) out.push_back(e.name);
    return out;
}

CRingPtr Document::ring(const std::string& name) const
{
    const Entry& e = entry(name);
    if (const auto* r = std::get_if<CRingPtr>(&e.value)) return *r;
    if (const auto* ctx = std::get_if<MatrixRingContext>(&e.value)) {
        auto it = context_rings_.find(name);
        if (it == context_rings_.end()) it = context_rings_.emplace(name, build_matrix_cring(*ctx).ring).first;
        return it->second;
    }
    throw UnknownReference("'" + name + "' is a " + e.kind + ", not a cring or context");
}

void Document::put(const std::string& name, std::string kind, Value value, ordered_json json)
{
    if (name.empty()) throw ParseError("objects need a non-empty name");
    if (contains(name)) throw ParseError("duplicate object name '" + name + "'");
    index_.emplace(name, entries_.size());
    entries_.push_back(Entry{name, std::move(kind), std::move(value), std::move(json)});
}

void Document::add_coalgebra(const std::string& name, CoalgebraPtr c)
{
    ordered_json j = header(name, "coalgebra");
    j["basis"] = labels_json(c->space);
    j["comult"] = matrix_to_json(c->comult);
    j["counit"] = c->counit ? matrix_to_json(*c->counit) : ordered_json();
    put(name, "coalgebra", std::move(c), std::move(j));
}

void Document::add_algebra(const std::string& name, AlgebraPtr a)
{
    ordered_json j = header(name, "algebra");
    j["basis"] = labels_json(a->space);
    j["mult"] = matrix_to_json(a->mult);
    j["unit"] = matrix_to_json(a->unit);
    put(name, "algebra", std::move(a), std::move(j));
}

void Document::add_comodule(const std::string& name, FinSpace space, std::optional<Side> left, std::optional<Side> right)
{
    ordered_json j = header(name, "comodule");
    j["basis"] = labels_json(space);
    std::optional<Coaction> l;
    std::optional<Coaction> r;
    if (left) {
        j["left"] = side_json(*left);
        l = Coaction{get<CoalgebraPtr>(left->coalgebra), left->coaction};
    }
    if (right) {
        j["right"] = side_json(*right);
        r = Coaction{get<CoalgebraPtr>(right->coalgebra), right->coaction};
    }
    Comodule m = building(name, [&] { return make_comodule(std::move(space), std::move(l), std::move(r)); });
    put(name, "comodule", std::move(m), std::move(j));
}

void Document::add_map(const std::string& name, const std::string& source, const std::string& target, Matrix map)
{
    ordered_json j = header(name, "map");
    j["source"] = source;
    j["target"] = target;
    j["matrix"] = matrix_to_json(map);
    CoalgebraMap f{get<CoalgebraPtr>(source), get<CoalgebraPtr>(target), std::move(map)};
    if (f.map.rows() != f.target->dim() || f.map.cols() != f.source->dim())
        throw ShapeMismatch("object '" + name + "': matrix must be dim target × dim source");
    put(name, "map", std::move(f), std::move(j));
}

void Document::add_context(const std::string& name, const std::string& c, const std::string& d, const std::string& n,
                           const std::string& m, Matrix sigma, Matrix tau)
{
    ordered_json j = header(name, "context");
    j["c"] = c;
    j["d"] = d;
    j["n"] = n;
    j["m"] = m;
    j["sigma"] = matrix_to_json(sigma);
    j["tau"] = matrix_to_json(tau);
    MatrixRingContext ctx = building(name, [&] {
        return make_context(get<CoalgebraPtr>(c), get<CoalgebraPtr>(d), get<Comodule>(n), get<Comodule>(m), std::move(sigma),
                            std::move(tau));
    });
    put(name, "context", std::move(ctx), std::move(j));
}

void Document::add_cring(const std::string& name, const std::string& coalgebra, const std::string& carrier, Matrix mult,
                         Matrix unit)
{
    ordered_json j = header(name, "cring");
    j["coalgebra"] = coalgebra;
    j["carrier"] = carrier;
    j["mult"] = matrix_to_json(mult);
    j["unit"] = matrix_to_json(unit);
    CRingPtr a = building(name, [&] { return make_cring(get<CoalgebraPtr>(coalgebra), get<Comodule>(carrier), mult, unit); });
    put(name, "cring", std::move(a), std::move(j));
}

void Document::add_module(const std::string& name, const std::string& ring_name, const std::string& comodule, Matrix action)
{
    ordered_json j = header(name, "module");
    j["ring"] = ring_name;
    j["comodule"] = comodule;
    j["action"] = matrix_to_json(action);
    RightModule m = building(name, [&] { return make_right_module(ring(ring_name), get<Comodule>(comodule), action); });
    put(name, "module", ModuleValue{ring_name, std::move(m)}, std::move(j));
}

void Document::add_entwining(const std::string& name, const std::string& algebra, const std::string& coalgebra,
                             Matrix psi_right, std::optional<Matrix> psi_left)
{
    ordered_json j = header(name, "entwining");
    j["algebra"] = algebra;
    j["coalgebra"] = coalgebra;
    j["psi_right"] = matrix_to_json(psi_right);
    if (psi_left) j["psi_left"] = matrix_to_json(*psi_left);
    AlgebraPtr a = get<AlgebraPtr>(algebra);
    CoalgebraPtr c = get<CoalgebraPtr>(coalgebra);
    EntwiningValue v = building(name, [&] {
        EntwiningValue out{make_right_we(a, c, std::move(psi_right)), std::nullopt};
        if (psi_left) out.left = make_left_we(a, c, std::move(*psi_left));
        return out;
    });
    put(name, "entwining", std::move(v), std::move(j));
}

void Document::add_entwined_module(const std::string& name, const std::string& entwining, FinSpace space, Matrix action,
                                   Matrix coaction)
{
    ordered_json j = header(name, "entwined-module");
    j["entwining"] = entwining;
    j["basis"] = labels_json(space);
    j["action"] = matrix_to_json(action);
    j["coaction"] = matrix_to_json(coaction);
    const EntwiningValue& s = get<EntwiningValue>(entwining);
    std::size_t n = space.dim();
    if (action.rows() != n || action.cols() != n * s.right.a->dim())
        throw ShapeMismatch("object '" + name + "': action must be m × (m·dim A)");
    if (coaction.rows() != n * s.right.c->dim() || coaction.cols() != n)
        throw ShapeMismatch("object '" + name + "': coaction must be (m·dim C) × m");
    put(name, "entwined-module", EntwinedModuleValue{entwining, WeakEntwinedModule{std::move(space), std::move(action), std::move(coaction)}},
        std::move(j));
}

void Document::add_galois_base(const std::string& name, const std::string& context, const std::string& target, Matrix pi)
{
    ordered_json j = header(name, "galois-base");
    j["context"] = context;
    j["target"] = target;
    j["pi"] = matrix_to_json(pi);
    CoalgebraPtr t = get<CoalgebraPtr>(target);
    const MatrixRingContext& ctx = get<MatrixRingContext>(context);
    GaloisBase base = building(name, [&] { return make_galois_base(ctx, CoalgebraMap{t, t, std::move(pi)}); });
    put(name, "galois-base", GaloisBaseValue{context, std::move(base)}, std::move(j));
}

ordered_json matrix_to_json(const Matrix& m)
{
    ordered_json out = ordered_json::object();
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    ordered_json entries = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& [i, v] : m.col(j)) entries.push_back(ordered_json::array({i, j, v.str()}));
    out["entries"] = std::move(entries);
    return out;
}

Matrix matrix_from_json(const ordered_json& j, Field f, const std::string& where)
{
    if (j.is_object()) {
        const ordered_json& r = member(j, "rows", where);
        const ordered_json& c = member(j, "cols", where);
        if (!r.is_number_unsigned() || !c.is_number_unsigned()) throw ParseError(where + ": rows and cols must be non-negative integers");
        Matrix m(r.get<std::size_t>(), c.get<std::size_t>(), f);
        const ordered_json& entries = member(j, "entries", where);
        if (!entries.is_array()) throw ParseError(where + ".entries: expected an array");
        for (std::size_t k = 0; k < entries.size(); ++k) {
            const ordered_json& e = entries[k];
            std::string w = where + ".entries[" + std::to_string(k) + "]";
            if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
                throw ParseError(w + ": expected [row, col, value]");
            std::size_t i = e[0].get<std::size_t>();
            std::size_t jj = e[1].get<std::size_t>();
            if (i >= m.rows() || jj >= m.cols())
                throw ShapeMismatch(w + ": index (" + std::to_string(i) + ", " + std::to_string(jj) + ") outside " +
                                    std::to_string(m.rows()) + " × " + std::to_string(m.cols()));
            m.set(i, jj, scalar(e[2], f, w));
        }
        return m;
    }
    if (j.is_array()) {
        std::vector<std::vector<Scalar>> rows;
        for (std::size_t i = 0; i < j.size(); ++i) {
            std::string w = where + "[" + std::to_string(i) + "]";
            if (!j[i].is_array()) throw ParseError(w + ": expected a row array");
            if (!rows.empty() && j[i].size() != rows.front().size()) throw ShapeMismatch(w + ": ragged rows");
            std::vector<Scalar> row;
            for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(scalar(j[i][k], f, w + "[" + std::to_string(k) + "]"));
            rows.push_back(std::move(row));
        }
        if (rows.empty()) throw ParseError(where + ": empty dense matrix; use the sparse form for 0-row matrices");
        return Matrix::from_rows(rows, f).in(f);
    }
    throw ParseError(where + ": expected a matrix");
}

ordered_json to_json(const Document& doc)
{
    ordered_json out = ordered_json::object();
    out["schema"] = 1;
    out["field"] = field_json(doc.field());
    if (!doc.description().empty()) out["description"] = doc.description();
    ordered_json objects = ordered_json::array();
    for (const auto& e : doc.entries()) objects.push_back(e.json);
    out["objects"] = std::move(objects);
    return out;
}

std::string emit(const Document& doc)
{
    std::ostringstream os;
    print(os, to_json(doc), 0);
    os << "\n";
    return os.str();
}

Document parse_document(const std::string& text_in, const std::string& source, std::optional<Field> field)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text_in);
    }
    catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_column(text_in, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError(source + ": top level must be an object");
    const ordered_json& schema = member(j, "schema", source);
    if (!schema.is_number_integer() || schema.get<int>() != 1) throw ParseError(source + ": unsupported schema " + schema.dump());
    Field f = field ? *field : parse_field(member(j, "field", source), source + ".field");
    std::string description = j.contains("description") && j["description"].is_string() ? j["description"].get<std::string>() : "";
    Document doc(f, description);
    const ordered_json& objects = member(j, "objects", source);
    if (!objects.is_array()) throw ParseError(source + ".objects: expected an array");
    for (std::size_t i = 0; i < objects.size(); ++i) {
        const ordered_json& o = objects[i];
        std::string where = source + ": objects[" + std::to_string(i) + "]";
        if (!o.is_object()) throw ParseError(where + ": expected an object");
        std::string name = text(o, "name", where);
        std::string kind = text(o, "kind", where);
        where += " ('" + name + "')";
        auto mat = [&](const char* key) { return matrix_from_json(member(o, key, where), f, where + "." + key); };
        if (kind == "coalgebra") {
            std::optional<Matrix> counit;
            if (o.contains("counit") && !o["counit"].is_null()) counit = mat("counit");
            FinSpace s = basis(o, name, where);
            Matrix comult = mat("comult");
            doc.add_coalgebra(name, building(name, [&] { return make_coalgebra(std::move(s), std::move(comult), std::move(counit)); }));
        }
        else if (kind == "algebra") {
            FinSpace s = basis(o, name, where);
            Matrix mult = mat("mult");
            Matrix unit = mat("unit");
            doc.add_algebra(name, building(name, [&] { return make_algebra(std::move(s), std::move(mult), std::move(unit)); }));
        }
        else if (kind == "comodule") {
            doc.add_comodule(name, basis(o, name, where), side(o, "left", f, where), side(o, "right", f, where));
        }
        else if (kind == "map") {
            doc.add_map(name, text(o, "source", where), text(o, "target", where), mat("matrix"));
        }
        else if (kind == "context") {
            doc.add_context(name, text(o, "c", where), text(o, "d", where), text(o, "n", where), text(o, "m", where), mat("sigma"),
                            mat("tau"));
        }
        else if (kind == "cring") {
            doc.add_cring(name, text(o, "coalgebra", where), text(o, "carrier", where), mat("mult"), mat("unit"));
        }
        else if (kind == "module") {
            doc.add_module(name, text(o, "ring", where), text(o, "comodule", where), mat("action"));
        }
        else if (kind == "entwining") {
            std::optional<Matrix> left;
            if (o.contains("psi_left") && !o["psi_left"].is_null()) left = mat("psi_left");
            doc.add_entwining(name, text(o, "algebra", where), text(o, "coalgebra", where), mat("psi_right"), std::move(left));
        }
        else if (kind == "entwined-module") {
            doc.add_entwined_module(name, text(o, "entwining", where), basis(o, name, where), mat("action"), mat("coaction"));
        }
        else if (kind == "galois-base") {
            doc.add_galois_base(name, text(o, "context", where), text(o, "target", where), mat("pi"));
        }
        else {
            throw ParseError(where + ": unknown kind '" + kind + "'");
        }
    }
    return doc;
}

Document load(const std::string& path, std::optional<Field> field)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), path, field);
}

Report validate(const Document& doc, const std::string& name)
{
    const Entry& e = doc.entry(name);
    return std::visit(
        [&](const auto& v) -> Report {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, CoalgebraPtr>) return check_coalgebra(*v);
            else if constexpr (std::is_same_v<T, AlgebraPtr>) return check_algebra(*v);
            else if constexpr (std::is_same_v<T, Comodule>) return check_comodule(v);
            else if constexpr (std::is_same_v<T, CoalgebraMap>) return check_coalgebra_map(v);
            else if constexpr (std::is_same_v<T, MatrixRingContext>) return verify_context(v);
            else if constexpr (std::is_same_v<T, CRingPtr>) return check_cring(*v);
            else if constexpr (std::is_same_v<T, ModuleValue>) return check_right_module(v.module);
            else if constexpr (std::is_same_v<T, EntwiningValue>) return v.left ? check_invertible(v.pair()) : check_right_we(v.right);
            else if constexpr (std::is_same_v<T, EntwinedModuleValue>)
                return check_entwined_module(doc.get<EntwiningValue>(v.entwining).right, v.module);
            else return check_coalgebra_map(v.base.pi);
        },
        e.value);
}

Report validate(const Document& doc)
{
    Report r("validate");
    for (const auto& e : doc.entries()) r.merge(validate(doc, e.name), e.name);
    return r;
}

}  // namespace cringlab
