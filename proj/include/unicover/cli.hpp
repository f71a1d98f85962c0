#pragma once

// Command-line front end. Exit codes:
//   0 success, 1 negative verdict (uncovered / not IDP), 2 malformed input,
//   3 precondition not met, 4 internal guarantee violated.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "unicover/generators.hpp"
#include "unicover/io.hpp"

namespace unicover::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kSchema = 2, kPrecondition = 3, kInternal = 4 };

namespace detail {

inline Json read_json(const std::string& path, std::istream& in) {
    std::stringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw SchemaError("cannot open '" + path + "'");
        buf << f.rdbuf();
    }
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
}

// Writes the whole text at once; files go through a temporary and a rename.
inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        out.flush();
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw SchemaError("cannot write '" + path + "'");
        f << text;
    }
    std::filesystem::rename(tmp, path);
}

inline VerifyMode parse_mode(const std::string& s) {
    if (s == "exact") return VerifyMode::exact();
    if (s.rfind("grid:", 0) == 0) {
        try {
            std::size_t used = 0;
            const long long m = std::stoll(s.substr(5), &used);
            if (used == s.size() - 5 && m >= 1) return VerifyMode::grid(m);
        } catch (const std::exception&) {
        }
    }
    throw SchemaError("verification mode must be 'exact' or 'grid:M', got '" + s + "'");
}

inline std::string dump(const Json& j) { return j.dump() + "\n"; }

// Prints one JSON error line and returns the matching exit code.
inline int report(const std::exception& e, std::ostream& err) {
    Json j;
    int code = kInternal;
    if (dynamic_cast<const SchemaError*>(&e)) {
        j = {{"error", "schema"}, {"message", e.what()}};
        code = kSchema;
    } else if (const auto* p = dynamic_cast<const PreconditionError*>(&e)) {
        j = {{"error", "precondition"}, {"reason", p->reason()}, {"message", e.what()}};
        code = kPrecondition;
    } else if (dynamic_cast<const OverflowError*>(&e)) {
        j = {{"error", "precondition"}, {"reason", "overflow"}, {"message", e.what()}};
        code = kPrecondition;
    } else if (dynamic_cast<const ResourceLimit*>(&e)) {
        j = {{"error", "precondition"}, {"reason", "resource_limit"}, {"message", e.what()}};
        code = kPrecondition;
    } else if (const auto* g = dynamic_cast<const GuaranteeViolation*>(&e)) {
        j = {{"error", "guarantee_violation"}, {"kind", g->kind()}, {"message", e.what()}, {"diagnostics", g->diagnostics()}};
    } else {
        j = {{"error", "internal"}, {"message", e.what()}};
    }
    err << j.dump() << "\n";
    return code;
}

}  // namespace detail

/// Runs one command; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Unimodular covers of lattice 3-polytopes", "unicover"};
    app.require_subcommand(1);

    std::string input = "-", output = "-";

    auto* cover = app.add_subcommand("cover", "build a unimodular cover of a polytope document");
    std::string verify_flag = "none";
    cover->add_option("--input,-i", input, "polytope JSON ('-' for stdin)");
    cover->add_option("--out,-o", output, "cover JSON ('-' for stdout)");
    cover->add_option("--verify", verify_flag, "none | exact | grid:M");

    auto* idp = app.add_subcommand("idp", "check the integer decomposition property");
    Int max_n = 3;
    std::string pair_path;
    idp->add_option("--input,-i", input, "polytope JSON");
    idp->add_option("--max-n", max_n, "largest dilation factor checked")->check(CLI::Range(2, 64));
    idp->add_option("--pair", pair_path, "second polytope JSON; checks the pair instead");

    auto* gen = app.add_subcommand("gen", "generate polytope documents");
    gen->require_subcommand(1);
    std::uint64_t seed = 0;
    Int max_coord = 5;
    Int wa = 1, wb = 1;
    std::uint64_t transform_seed = 0;
    std::string which;
    auto* gen_white = gen->add_subcommand("white", "White tetrahedron T(a,b)");
    gen_white->add_option("a", wa)->required();
    gen_white->add_option("b", wb)->required();
    auto* transform = gen_white->add_option("--transform-seed", transform_seed, "apply a random unimodular map; emits a vrep");
    auto* gen_ex = gen->add_subcommand("example26", "non-IDP octahedron or prism");
    gen_ex->add_option("which", which)->required()->check(CLI::IsMember({"octahedron", "prism"}));
    auto* gen_pp = gen->add_subcommand("rand-ppiped", "random lattice parallelepiped");
    gen_pp->add_option("--seed", seed);
    gen_pp->add_option("--max-coord", max_coord)->check(CLI::Range(1, 1000));
    auto* gen_ws = gen->add_subcommand("rand-weak-summand-pair", "random Cayley pair (P weak summand of Q)");
    gen_ws->add_option("--seed", seed);

    auto* nf = app.add_subcommand("normal-form", "White normal form of an empty tetrahedron");
    nf->add_option("--input,-i", input, "vrep (4 vertices) or white JSON");

    auto* ver = app.add_subcommand("verify", "verify a cover document");
    std::string mode_flag = "exact";
    ver->add_option("--input,-i", input, "cover JSON");
    ver->add_option("--mode", mode_flag, "exact | grid:M");

    auto* exp = app.add_subcommand("export", "write a cover as a mesh");
    std::string format = "off";
    exp->add_option("--input,-i", input, "cover JSON");
    exp->add_option("--format", format)->check(CLI::IsMember({"off", "obj"}));
    exp->add_option("--out,-o", output);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << Json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return kSchema;
    }

    try {
        if (*cover) {
            const PolytopeDoc doc = polytope_from_json(detail::read_json(input, in));
            std::optional<VerifyMode> mode;
            if (verify_flag != "none") mode = detail::parse_mode(verify_flag);
            const Cover c = cover_of(doc);
            CoverDoc cd = make_cover_doc(doc, c);
            int code = kOk;
            if (mode) {
                VerifyOptions opts;
                opts.mode = *mode;
                const VerifyReport r = verify_cover(body_of(doc), cd.simplices, opts);
                cd.verification = to_json(r);
                if (!r.ok()) code = kNegative;
            }
            detail::emit(output, detail::dump(to_json(cd)), out);
            return code;
        }
        if (*idp) {
            const Json first = detail::read_json(input, in);
            if (!pair_path.empty()) {
                // Pair members may be lower-dimensional, so vrep input is taken as is.
                auto points = [](const PolytopeDoc& d) {
                    if (const auto* v = std::get_if<VrepDoc>(&d)) return v->vertices;
                    return body_of(d).vertices();
                };
                const auto p = points(polytope_from_json(first));
                const auto q = points(polytope_from_json(detail::read_json(pair_path, in)));
                const auto r = pair_idp_check(std::span<const IntPoint3>(p), std::span<const IntPoint3>(q));
                out << detail::dump(to_json(r));
                return r.pass ? kOk : kNegative;
            }
            const auto r = idp_check(body_of(polytope_from_json(first)), max_n);
            out << detail::dump(to_json(r));
            return r.pass ? kOk : kNegative;
        }
        if (*gen) {
            PolytopeDoc doc;
            if (*gen_white) {
                const auto v = white_vertices({wa, wb});
                if (transform->count() > 0) {
                    Rng rng(transform_seed);
                    const auto phi = random_unimodular_map(rng);
                    VrepDoc d;
                    for (const auto& p : v) d.vertices.push_back(phi(p));
                    doc = d;
                } else {
                    doc = WhiteDoc{wa, wb};
                }
            } else if (*gen_ex) {
                doc = VrepDoc{example26(which)};
            } else if (*gen_pp) {
                Rng rng(seed);
                const Parallelepiped p = random_parallelepiped(rng, max_coord);
                doc = ParallelepipedDoc{p.base(), p.edges()};
            } else {
                Rng rng(seed);
                const CayleySpec s = random_weak_summand_pair(rng);
                doc = CayleyDoc{s.P.vertices(), s.Q.vertices()};
            }
            out << detail::dump(to_json(doc));
            return kOk;
        }
        if (*nf) {
            const PolytopeDoc doc = polytope_from_json(detail::read_json(input, in));
            std::array<IntPoint3, 4> v;
            if (const auto* w = std::get_if<WhiteDoc>(&doc)) {
                v = white_vertices({w->a, w->b});
            } else if (const auto* r = std::get_if<VrepDoc>(&doc); r && r->vertices.size() == 4) {
                std::copy(r->vertices.begin(), r->vertices.end(), v.begin());
            } else {
                throw PreconditionError("not_tetrahedron", "normal-form needs a tetrahedron (white or 4-vertex vrep)");
            }
            out << detail::dump(to_json(white_normal_form(Simplex3(v))));
            return kOk;
        }
        if (*ver) {
            const CoverDoc cd = cover_from_json(detail::read_json(input, in));
            VerifyOptions opts;
            opts.mode = detail::parse_mode(mode_flag);
            const VerifyReport r = verify_cover(body_of(cd.target), cd.simplices, opts);
            out << detail::dump(to_json(r));
            return r.ok() ? kOk : kNegative;
        }
        if (*exp) {
            const CoverDoc cd = cover_from_json(detail::read_json(input, in));
            std::ostringstream os;
            if (format == "obj")
                write_obj(os, cd.simplices);
            else
                write_off(os, cd.simplices);
            detail::emit(output, os.str(), out);
            return kOk;
        }
    } catch (const std::exception& e) {
        return detail::report(e, err);
    }
    return kSchema;
}

}  // namespace unicover::cli
