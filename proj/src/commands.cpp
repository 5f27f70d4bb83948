#include "cringlab/commands.hpp"

#include <stdexcept>

#include "cringlab/fixtures.hpp"

namespace cringlab {

namespace {

std::string pick(const Document& doc, const std::vector<std::string>& args, std::size_t i, const std::string& kind)
{
    if (i < args.size()) return args[i];
    std::vector<std::string> names = doc.names(kind);
    if (names.empty()) throw UnknownReference("the document has no " + kind);
    return names.front();
}

void arity(const std::vector<std::string>& args, std::size_t max, const std::string& command)
{
    if (args.size() > max)
        throw std::invalid_argument(command + " takes at most " + std::to_string(max) + " object name" + (max == 1 ? "" : "s"));
}

Report check(const Document& doc, const std::vector<std::string>& args)
{
    arity(args, 1, "check");
    if (args.empty()) return validate(doc);
    Report r("check " + args[0]);
    r.merge(validate(doc, args[0]));
    return r;
}

Report cotensor_command(const Document& doc, const std::vector<std::string>& args)
{
    if (args.size() != 2) throw std::invalid_argument("cotensor takes two comodule names");
    const Comodule& m = doc.get<Comodule>(args[0]);
    const Comodule& n = doc.get<Comodule>(args[1]);
    Cotensor t = cotensor(m, n);
    Report r("cotensor " + args[0] + " □ " + args[1]);
    r.merge(check_cotensor(t, {&m, &n}));
    r.note("dim", std::to_string(t.dim()));
    r.note("ambient dim", std::to_string(t.ambient.dim()));
    for (std::size_t j = 0; j < t.dim(); ++j) r.note("basis " + std::to_string(j), describe(t.inclusion().column(j), t.ambient.labels));
    return r;
}

Report build_cring(const Document& doc, const std::vector<std::string>& args)
{
    arity(args, 1, "build-cring");
    std::string name = args.empty() ? (doc.names("context").empty() ? pick(doc, args, 0, "entwining") : pick(doc, args, 0, "context"))
                                    : args[0];
    Report r("build-cring " + name);
    const Entry& e = doc.entry(name);
    if (const auto* ctx = std::get_if<MatrixRingContext>(&e.value)) {
        Report v = verify_context(*ctx);
        r.merge(v, "Context");
        if (!v.ok()) return r;
        MatrixCRing a = build_matrix_cring(*ctx);
        r.merge(check_cring(*a.ring), "CRing");
        r.merge(check_right_module(a.m), "M");
        r.merge(check_left_module(a.n), "N");
        r.note("dim A", std::to_string(a.ring->dim()));
        return r;
    }
    if (const auto* s = std::get_if<EntwiningValue>(&e.value)) {
        try {
            Report right;
            EntwiningCRing a = cring_from_we(s->right, &right);
            r.merge(right, "Right");
            r.note("dim A", std::to_string(a.ring->dim()));
            if (s->left) {
                Report left;
                EntwiningCRing b = cring_from_left_we(*s->left, &left);
                r.merge(left, "Left");
                r.note("dim B", std::to_string(b.ring->dim()));
            }
        }
        catch (const std::invalid_argument& ex) {
            r.add("Entwining", Status::fail, {}, ex.what());
        }
        return r;
    }
    throw UnknownReference("'" + name + "' is a " + e.kind + "; build-cring needs a context or an entwining");
}

Report galois(const Document& doc, const std::vector<std::string>& args)
{
    arity(args, 2, "galois");
    std::string name = pick(doc, args, 0, "context");
    const MatrixRingContext& ctx = doc.get<MatrixRingContext>(name);
    Report r("galois " + name + (args.size() > 1 ? " " + args[1] : ""));
    Report v = verify_context(ctx);
    r.merge(v, "Context");
    if (!v.ok()) return r;
    RightModule m = args.size() > 1 ? doc.get<ModuleValue>(args[1]).module : build_matrix_cring(ctx).m;
    GaloisReport g = beta(m, ctx);
    r.merge(g.report);
    bool principal = chi_solver(m, g, ChiCodomain::tensor).feasible();
    bool bijective = chi_solver(m, g, ChiCodomain::cotensor).feasible();
    r.expect(principal == g.principal, "ChiTensorAgrees", {},
             std::string("χ on N⊗M ") + (principal ? "exists" : "does not exist"));
    r.expect(bijective == g.bijective, "ChiCotensorAgrees", {},
             std::string("χ on N□M ") + (bijective ? "exists" : "does not exist"));
    r.note("dim A", std::to_string(m.ring->dim()));
    return r;
}

Report connection(const Document& doc, const std::vector<std::string>& args, const CommandOptions& options)
{
    arity(args, 1, "connection");
    std::string name = args.empty() ? (doc.names("galois-base").empty() ? pick(doc, args, 0, "context") : pick(doc, args, 0, "galois-base"))
                                    : args[0];
    const Entry& e = doc.entry(name);
    ConnectionLimits limits;
    limits.max_kernel_dim = options.max_dim;
    limits.max_ring_dim = options.max_dim;
    Report r("connection " + name);
    if (const auto* b = std::get_if<GaloisBaseValue>(&e.value)) {
        r.merge(connection_report(b->base, limits));
        return r;
    }
    if (const auto* ctx = std::get_if<MatrixRingContext>(&e.value)) {
        CoalgebraPtr ce = coendomorphism_coalgebra(*ctx);
        GaloisBase base = make_galois_base(*ctx, CoalgebraMap{ce, fixtures::grouplike(1, ctx->field()), *ce->counit});
        r.note("π", "ε_E");
        r.merge(connection_report(base, limits));
        return r;
    }
    throw UnknownReference("'" + name + "' is a " + e.kind + "; connection needs a galois-base or a context");
}

Report we_check(const Document& doc, const std::vector<std::string>& args)
{
    arity(args, 1, "we-check");
    std::string name = pick(doc, args, 0, "entwining");
    const EntwiningValue& s = doc.get<EntwiningValue>(name);
    Report r("we-check " + name);
    if (!s.left) {
        r.merge(check_right_we(s.right), "Right");
        r.merge(check_projections(s.right), "Right");
        return r;
    }
    r.merge(check_invertible(s.pair()));
    r.merge(iso_psi_restrictions(s.pair()), "Iso");
    return r;
}

Report kts(const Document& doc, const std::vector<std::string>& args, const CommandOptions& options)
{
    arity(args, 2, "kts");
    std::string name = pick(doc, args, 0, "entwining");
    const EntwiningValue& s = doc.get<EntwiningValue>(name);
    if (!s.left) throw std::invalid_argument("kts needs an invertible entwining ('" + name + "' has no psi_left)");
    std::string module;
    if (args.size() > 1) {
        module = args[1];
    }
    else {
        for (const auto& n : doc.names("entwined-module"))
            if (doc.get<EntwinedModuleValue>(n).entwining == name) {
                module = n;
                break;
            }
        if (module.empty()) throw UnknownReference("no entwined-module over '" + name + "'");
    }
    const WeakEntwinedModule& m = doc.get<EntwinedModuleValue>(module).module;
    if (m.space.dim() != s.right.c->dim() || m.coaction != s.right.c->comult)
        throw std::invalid_argument("kts needs C itself, with coaction Δ, as the entwined module ('" + module + "' is not)");
    KtsResult k = kts_pipeline(s.pair(), m.action, options.seed);
    Report r("kts " + name + " " + module);
    r.merge(k.report);
    return r;
}

}  // namespace

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names = {"check", "cotensor", "build-cring", "galois", "connection", "we-check", "kts"};
    return names;
}

Report run_command(const std::string& command, const Document& doc, const std::vector<std::string>& args,
                   const CommandOptions& options)
{
    if (command == "check") return check(doc, args);
    if (command == "cotensor") return cotensor_command(doc, args);
    if (command == "build-cring") return build_cring(doc, args);
    if (command == "galois") return galois(doc, args);
    if (command == "connection") return connection(doc, args, options);
    if (command == "we-check") return we_check(doc, args);
    if (command == "kts") return kts(doc, args, options);
    throw std::invalid_argument("unknown command '" + command + "'");
}

}  // namespace cringlab
