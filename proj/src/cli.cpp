#include "kmu/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "kmu/algebra.hpp"
#include "kmu/catalog.hpp"
#include "kmu/io.hpp"
#include "kmu/riemannian.hpp"
#include "kmu/soliton.hpp"

namespace kmu::cli {

using nlohmann::json;

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Splits at `sep` outside parentheses.
std::vector<std::string> split_top_level(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth < 0) throw std::invalid_argument("unbalanced parentheses in '" + std::string(text) + "'");
        if (ch == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    if (depth != 0) throw std::invalid_argument("unbalanced parentheses in '" + std::string(text) + "'");
    parts.push_back(cur);
    return parts;
}

QSqrt2 parse_factor(const std::string& f) {
    if (f.size() >= 2 && f.front() == '(' && f.back() == ')') return QSqrt2::parse(f.substr(1, f.size() - 2));
    return QSqrt2::parse(f);
}

template <Field S>
S to_backend(const QSqrt2& x) {
    if constexpr (is_exact_v<S>)
        return x;
    else
        return x.to_double();
}

template <Field S>
Vector<S> parse_one_combination(const MetricLieAlgebra<S>& m, const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty linear combination");
    const auto& alg = m.algebra();
    Vector<S> out(m.dim(), S(0));
    // Signed terms at top-level '+' / '-'.
    std::vector<std::pair<int, std::string>> terms;
    int sign = 1;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth == 0 && (ch == '+' || ch == '-') && (cur.empty() || cur.back() != '*')) {
            if (!cur.empty()) {
                terms.emplace_back(sign, cur);
                cur.clear();
                sign = 1;
            }
            if (ch == '-') sign = -sign;
            continue;
        }
        cur.push_back(ch);
    }
    if (cur.empty()) throw std::invalid_argument("dangling sign in '" + text + "'");
    terms.emplace_back(sign, cur);

    for (const auto& [sg, term] : terms) {
        auto factors = split_top_level(term, '*');
        const std::string label = factors.back();
        factors.pop_back();
        QSqrt2 coeff(sg);
        for (const auto& f : factors) coeff *= parse_factor(f);
        Vector<S> v;
        if (auto idx = alg.index_of(label)) {
            v = unit_vector<S>(m.dim(), *idx);
        } else if (label == "H0") {
            v = mean_curvature_vector(m);
        } else {
            throw std::invalid_argument("unknown basis label '" + label + "' in '" + text + "'");
        }
        axpy(to_backend<S>(coeff), v, out);
    }
    return out;
}

void print_quiet(const VerificationReport& rep, std::ostream& out) {
    for (const auto& r : rep.records) {
        out << r.name << ": " << to_string(r.status);
        if (!r.witness.empty()) out << " (" << r.witness << ")";
        out << "\n";
    }
    out << "verdict: " << (rep.passed() ? "pass" : "fail") << "\n";
}

template <Field S>
void add_matrix_scalars(CheckRecord& rec, const std::string& prefix, const Matrix<S>& a,
                        const std::vector<std::string>& labels) {
    for (std::size_t c = 0; c < a.cols(); ++c)
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (!is_zero(a(r, c), 0.0))
                rec.scalars.push_back(report_scalar(prefix + "(" + labels[c] + ")." + labels[r], a(r, c)));
}

std::string vector_text(const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += FieldTraits<double>::to_string(v[i]);
    }
    return s + "]";
}

AnyDocument load_input(const std::string& path) {
    try {
        return load_document(path);
    } catch (const InputError& ex) {
        const std::string what = ex.what();
        if (what.rfind(path, 0) == 0) throw;
        throw InputError(path + ": " + what);
    }
}

struct Options {
    bool quiet = false;
    bool no_timestamp = false;
};

// ---- command implementations -------------------------------------------------

template <Field S>
VerificationReport cmd_check(const AlgebraDocument<S>& doc, const std::string& kind, const std::optional<std::string>& c) {
    const auto& m = doc.metric;
    if (kind == "jacobi") return validate_jacobi(m.algebra());
    if (kind == "contact") return validate_structure(doc.contact_algebra());
    if (kind == "einstein") return einstein_check(m).report;
    if (kind == "soliton") return algebraic_soliton_solve(m).report;
    if (kind == "lauret") {
        std::optional<S> cc;
        if (c) cc = to_backend<S>(QSqrt2::parse(*c));
        return lauret_conditions(m, cc).report;
    }
    if (kind == "iwasawa") return is_iwasawa_type(m).report;
    if (kind == "kahler") return validate_kahler(doc.hermitian_algebra());
    throw std::invalid_argument("unknown check '" + kind + "'");
}

template <Field S>
VerificationReport cmd_ricci(const AlgebraDocument<S>& doc) {
    const CurvaturePackage<S> pkg(doc.metric);
    VerificationReport rep;
    rep.subject = doc.metric.name();
    auto& rec = rep.add("ricci_operator", Status::pass, {}, "Ric(e_c).e_r, nonzero entries");
    rec.scalars.push_back(report_scalar("scalar_curvature", pkg.scalar_curvature()));
    add_matrix_scalars(rec, "Ric", pkg.ricci(), doc.metric.algebra().labels());
    return rep;
}

template <Field S>
VerificationReport cmd_min_sec(const AlgebraDocument<S>& doc, std::size_t samples, std::uint64_t seed,
                               std::size_t refine) {
    const auto best = min_sectional_sampled(doc.metric, samples, seed, refine);
    VerificationReport rep;
    rep.subject = doc.metric.name();
    auto& rec = rep.add("min_sectional", Status::pass, "x=" + vector_text(best.x) + " y=" + vector_text(best.y),
                        "upper bound on the minimum over all 2-planes");
    rec.scalars.push_back(ReportScalar{"value", best.value, std::nullopt});
    rec.scalars.push_back(ReportScalar{"samples", static_cast<double>(samples), std::to_string(samples)});
    rec.scalars.push_back(ReportScalar{"seed", static_cast<double>(seed), std::to_string(seed)});
    rec.scalars.push_back(ReportScalar{"refine_steps", static_cast<double>(refine), std::to_string(refine)});
    return rep;
}

template <Field S>
VerificationReport cmd_rank_reduce(const AlgebraDocument<S>& doc, const std::string& aprime) {
    const auto& m = doc.metric;
    const auto vecs = parse_combinations(m, aprime);
    const auto rr = rank_reduction(m, vecs);
    VerificationReport rep;
    rep.subject = m.name();
    {
        std::string basis;
        for (const auto& l : rr.sub.algebra().labels()) basis += (basis.empty() ? "" : ",") + l;
        auto& rec = rep.add("reduced_algebra", Status::pass, basis);
        rec.scalars.push_back(ReportScalar{"dim", static_cast<double>(rr.sub.dim()), std::to_string(rr.sub.dim())});
    }
    {
        auto& rec = rep.add("einstein_direct", Status::pass, rr.einstein.einstein ? "true" : "false",
                            "direct Ricci computation on the reduced algebra");
        rec.scalars.push_back(report_scalar("lambda", rr.einstein.lambda));
        rec.scalars.push_back(report_scalar("residual", rr.einstein.residual));
    }
    if (rr.heber) {
        auto& rec = rep.add("heber_einstein", Status::pass, *rr.heber ? "true" : "false", "H0 in a'");
        rec.scalars.push_back(
            ReportScalar{"H0", 0.0, combination_label(m.algebra().labels(), rr.mean_curvature)});
        rep.add("heber_consistency", *rr.heber == rr.einstein.einstein, {},
                "criterion agrees with the direct check");
    } else {
        rep.add("heber_einstein", Status::not_applicable, {}, rr.note);
        rep.add("heber_consistency", Status::not_applicable, {}, rr.note);
    }
    {
        auto& rec = rep.add("soliton", rr.soliton.is_soliton(), std::string(to_string(rr.soliton.status)));
        rec.scalars.push_back(report_scalar("soliton_constant", rr.soliton.c));
        rec.note = std::string("type ") + std::string(to_string(rr.soliton.label));
    }
    {
        const auto ambient = algebraic_soliton_solve(m);
        if (ambient.is_soliton()) {
            const S d = rr.soliton.c - ambient.c;
            auto& rec = rep.add("soliton_constant_preserved", is_zero(d, 1e-9), {},
                                "reduced constant equals the ambient soliton constant");
            rec.scalars.push_back(report_scalar("ambient_soliton_constant", ambient.c));
            rec.scalars.push_back(report_scalar("difference", d));
        } else {
            rep.add("soliton_constant_preserved", Status::not_applicable, {}, "ambient is not a soliton");
        }
    }
    return rep;
}

template <Field S>
VerificationReport cmd_verify_iso(const AlgebraDocument<S>& src, const AlgebraDocument<S>& dst, const json& map_doc) {
    if (!map_doc.is_object()) throw InputError("map file must be an object");
    for (const auto& [key, _] : map_doc.items())
        if (key != "matrix") throw InputError("unknown field '" + key + "' in map file");
    if (!map_doc.contains("matrix")) throw InputError("missing field 'matrix' in map file");
    const auto map = parse_matrix<S>(map_doc["matrix"], dst.metric.dim(), src.metric.dim(), "matrix");
    return check_structure_isomorphism(src.contact_algebra(), dst.contact_algebra(), map);
}

template <Field S>
VerificationReport cmd_deform(const AlgebraDocument<S>& doc, const std::string& a_text, const std::string& output) {
    const S a = to_backend<S>(QSqrt2::parse(a_text));
    const auto cm = doc.contact_algebra();
    const auto deformed = d_homothetic(cm, a);
    VerificationReport rep;
    rep.subject = deformed.name();
    rep.append(validate_structure(deformed), "deformed");
    const auto before = kappa_mu_fit(cm);
    const auto after = kappa_mu_fit(deformed);
    rep.append(after.report, "deformed");
    if (before.is_kappa_mu && before.mu && after.mu) {
        const auto [pk, pm] = d_homothetic_kappa_mu(before.kappa, *before.mu, a);
        const double tol = 1e-9;
        const bool ok = is_zero(S(pk - after.kappa), tol) && is_zero(S(pm - *after.mu), tol);
        auto& rec = rep.add("formula_match", ok, {}, "fitted (kappa, mu) against the deformation formulas");
        rec.scalars.push_back(report_scalar("predicted_kappa", pk));
        rec.scalars.push_back(report_scalar("predicted_mu", pm));
        rec.scalars.push_back(report_scalar("fitted_kappa", after.kappa));
        rec.scalars.push_back(report_scalar("fitted_mu", *after.mu));
    } else {
        rep.add("formula_match", Status::not_applicable, {}, "input is not a (kappa, mu)-space with determined mu");
    }
    if (!output.empty()) {
        std::ofstream f(output);
        if (!f) throw InputError("cannot write " + output);
        f << to_json(make_document(deformed)).dump(2) << "\n";
    }
    return rep;
}

// ---- catalog -----------------------------------------------------------------

struct EmitParams {
    std::string alpha = "0";
    std::string beta = "2";
    std::size_t n = 2;
    std::string c = "2*r2";
    std::size_t m = 1;
    std::size_t dim = 3;
    std::string field = "exact";
};

template <Field S>
json emit_family_as(const std::string& family, const EmitParams& p, std::ostream& err) {
    auto scalar = [](const std::string& s) { return to_backend<S>(QSqrt2::parse(s)); };
    if (family == "g-alpha-beta") {
        const S alpha = scalar(p.alpha);
        const S beta = scalar(p.beta);
        if (!in_kappa_mu_range(alpha, beta))
            err << "warning: beta > alpha >= 0 does not hold; the algebra need not be a (kappa,mu)-space\n";
        return to_json(make_document(build_g_alpha_beta(alpha, beta, p.n)));
    }
    if (family == "heisenberg") return to_json(make_document(build_heisenberg<S>(p.n)));
    if (family == "solvable-model") return to_json(make_document(build_solvable_model(scalar(p.c), p.m)));
    if (family == "hyperbolic-plane") return to_json(make_document(build_hyperbolic_plane<S>()));
    if (family == "abelian") return to_json(make_document(build_flat<S>(p.dim)));
    if (family == "s-N") return to_json(make_document(convert_contact<S>(build_s_N(p.n))));
    if (family == "so2n-iwasawa") {
        const QSqrt2 c = QSqrt2::parse(p.c);
        const auto basis = build_so2n_iwasawa(p.n, c);
        MetricLieAlgebra<QSqrt2> m(matrix_structure_constants(basis, "so(2," + std::to_string(p.n) + ")-iwasawa"),
                                   iwasawa_model_gram(basis, c));
        HermitianAlgebra<QSqrt2> h{std::move(m), iwasawa_complex_structure(p.n, c)};
        return to_json(make_document(HermitianAlgebra<S>{convert_metric<S>(h.metric), convert_matrix<S>(h.J)}));
    }
    throw std::invalid_argument("unknown family '" + family + "' (see 'catalog list')");
}

json emit_family(const std::string& family, const EmitParams& p, std::ostream& err) {
    if (p.field == "exact") return emit_family_as<QSqrt2>(family, p, err);
    if (p.field == "float") return emit_family_as<double>(family, p, err);
    throw std::invalid_argument("--field must be 'exact' or 'float'");
}

json catalog_listing() {
    json fams = json::array();
    for (const auto& f : catalog_families())
        fams.push_back({{"name", f.name}, {"parameters", f.parameters}, {"description", f.description}});
    return {{"tool", kToolName}, {"version", kVersion}, {"families", fams}};
}

}  // namespace

std::string sha256_files(const std::vector<std::string>& paths) {
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
        EVP_MD_CTX_free(ctx);
        throw std::runtime_error("SHA-256 unavailable");
    }
    for (const auto& p : paths) {
        const std::string bytes = read_file(p);
        EVP_DigestUpdate(ctx, bytes.data(), bytes.size());
    }
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, md, &len);
    EVP_MD_CTX_free(ctx);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return hex.str();
}

json report_json(const VerificationReport& report, const ReportContext& ctx) {
    json records = json::array();
    for (const auto& r : report.records) {
        json scalars = json::array();
        for (const auto& s : r.scalars) {
            json js{{"name", s.name}, {"value", s.value}};
            if (s.exact) js["exact"] = *s.exact;
            scalars.push_back(std::move(js));
        }
        json rec{{"name", r.name}, {"status", to_string(r.status)}, {"scalars", std::move(scalars)}};
        if (!r.witness.empty()) rec["witness"] = r.witness;
        if (!r.note.empty()) rec["note"] = r.note;
        records.push_back(std::move(rec));
    }
    json out{{"tool", kToolName}, {"version", kVersion}, {"command", ctx.command}, {"subject", report.subject}};
    out["input_digest"] = ctx.inputs.empty() ? json(nullptr) : json("sha256:" + sha256_files(ctx.inputs));
    out["records"] = std::move(records);
    out["verdict"] = report.passed() ? "pass" : "fail";
    if (ctx.timestamp) {
        out["timestamp"] = utc_timestamp();
        out["wall_time_ms"] = ctx.wall_time_ms;
    }
    return out;
}

template <Field S>
std::vector<Vector<S>> parse_combinations(const MetricLieAlgebra<S>& m, std::string_view text) {
    std::vector<Vector<S>> out;
    for (const auto& part : split_top_level(text, ',')) out.push_back(parse_one_combination(m, part));
    return out;
}

template std::vector<Vector<QSqrt2>> parse_combinations(const MetricLieAlgebra<QSqrt2>&, std::string_view);
template std::vector<Vector<double>> parse_combinations(const MetricLieAlgebra<double>&, std::string_view);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    CLI::App app{"Structure, curvature and contact-metric checks for metric Lie algebras", std::string(kToolName)};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));
    Options opt;
    app.add_flag("--quiet", opt.quiet, "print verdict lines only");
    app.add_flag("--no-timestamp", opt.no_timestamp, "omit timestamp and wall time from reports");

    auto sub = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
        auto* s = parent->add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    auto* catalog = sub(&app, "catalog", "list or emit catalog algebras");
    catalog->require_subcommand(1);
    auto* list = sub(catalog, "list", "list catalog families");
    auto* emit = sub(catalog, "emit", "write an algebra definition file");
    std::string family, emit_out;
    EmitParams ep;
    emit->add_option("family", family, "family name")->required();
    emit->add_option("--alpha", ep.alpha, "alpha (g-alpha-beta)");
    emit->add_option("--beta", ep.beta, "beta (g-alpha-beta)");
    emit->add_option("--n", ep.n, "size parameter");
    emit->add_option("--c", ep.c, "model scale (solvable-model, so2n-iwasawa)");
    emit->add_option("--m", ep.m, "number of pairs (solvable-model)");
    emit->add_option("--dim", ep.dim, "dimension (abelian)");
    emit->add_option("--field", ep.field, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    emit->add_option("-o,--output", emit_out, "output file (default stdout)");

    auto* check = sub(&app, "check", "run a structural check");
    std::string check_kind, file;
    std::optional<std::string> lauret_c;
    check->add_option("kind", check_kind, "jacobi|contact|einstein|soliton|lauret|iwasawa|kahler")
        ->required()
        ->check(CLI::IsMember({"jacobi", "contact", "einstein", "soliton", "lauret", "iwasawa", "kahler"}));
    check->add_option("file", file, "algebra definition file")->required();
    check->add_option("--c", lauret_c, "soliton constant for lauret (default: solved)");

    auto* kmu_cmd = sub(&app, "kappa-mu", "fit the (kappa, mu) nullity condition");
    kmu_cmd->add_option("file", file)->required();
    auto* ricci = sub(&app, "ricci", "Ricci operator and scalar curvature");
    ricci->add_option("file", file)->required();

    auto* minsec = sub(&app, "min-sec", "sampled minimum of the sectional curvature");
    std::size_t samples = 10000, refine = 50;
    std::uint64_t seed = 1;
    minsec->add_option("file", file)->required();
    minsec->add_option("--samples", samples, "number of random planes");
    minsec->add_option("--seed", seed, "random seed");
    minsec->add_option("--refine", refine, "descent steps per plane");

    auto* rank = sub(&app, "rank-reduce", "reduce a' and compare the Heber criterion with a direct check");
    std::string aprime;
    rank->add_option("file", file)->required();
    rank->add_option("--aprime", aprime, "comma-separated label combinations spanning a'")->required();

    auto* iso = sub(&app, "verify-iso", "check a contact metric isomorphism");
    std::string dst_file, map_file;
    iso->add_option("src", file)->required();
    iso->add_option("dst", dst_file)->required();
    iso->add_option("--map", map_file, "JSON {\"matrix\": rows}, column c = image of src e_c")->required();

    auto* deform = sub(&app, "deform", "D-homothetic deformation and revalidation");
    std::string a_text, deform_out;
    deform->add_option("file", file)->required();
    deform->add_option("--a", a_text, "deformation constant")->required();
    deform->add_option("-o,--output", deform_out, "write the deformed algebra here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }

    try {
        if (catalog->parsed()) {
            if (list->parsed()) {
                out << catalog_listing().dump(2) << "\n";
                return ok;
            }
            const json doc = emit_family(family, ep, err);
            if (emit_out.empty()) {
                out << doc.dump(2) << "\n";
            } else {
                std::ofstream f(emit_out);
                if (!f) throw InputError("cannot write " + emit_out);
                f << doc.dump(2) << "\n";
            }
            return ok;
        }

        ReportContext ctx;
        ctx.timestamp = !opt.no_timestamp;
        ctx.inputs = {file};
        VerificationReport rep;
        auto visit = [&](auto&& fn) { rep = std::visit(fn, load_input(file)); };

        if (check->parsed()) {
            ctx.command = "check " + check_kind;
            visit([&](const auto& doc) { return cmd_check(doc, check_kind, lauret_c); });
        } else if (kmu_cmd->parsed()) {
            ctx.command = "kappa-mu";
            visit([&](const auto& doc) { return kappa_mu_fit(doc.contact_algebra()).report; });
        } else if (ricci->parsed()) {
            ctx.command = "ricci";
            visit([&](const auto& doc) { return cmd_ricci(doc); });
        } else if (minsec->parsed()) {
            ctx.command = "min-sec";
            if (samples == 0) throw std::invalid_argument("--samples must be positive");
            visit([&](const auto& doc) { return cmd_min_sec(doc, samples, seed, refine); });
        } else if (rank->parsed()) {
            ctx.command = "rank-reduce";
            visit([&](const auto& doc) { return cmd_rank_reduce(doc, aprime); });
        } else if (iso->parsed()) {
            ctx.command = "verify-iso";
            ctx.inputs = {file, dst_file, map_file};
            const auto src = load_input(file);
            const auto dst = load_input(dst_file);
            const json map_doc = read_json_file(map_file);
            if (src.index() != dst.index()) throw InputError("source and target use different fields");
            if (src.index() == 0)
                rep = cmd_verify_iso(std::get<0>(src), std::get<0>(dst), map_doc);
            else
                rep = cmd_verify_iso(std::get<1>(src), std::get<1>(dst), map_doc);
        } else if (deform->parsed()) {
            ctx.command = "deform";
            visit([&](const auto& doc) { return cmd_deform(doc, a_text, deform_out); });
        }

        ctx.wall_time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (opt.quiet)
            print_quiet(rep, out);
        else
            out << report_json(rep, ctx).dump(2) << "\n";
        return rep.passed() ? ok : check_failed;
    } catch (const InputError& ex) {
        err << "error: " << ex.what() << "\n";
        return input_error;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return input_error;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return input_error;
    }
}

}  // namespace kmu::cli
