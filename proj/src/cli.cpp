#include "brion/cli.hpp"

#include "brion/face_complexes.hpp"
#include "brion/generator.hpp"
#include "brion/io.hpp"
#include "brion/series.hpp"
#include "brion/sigma.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace brion::cli {

namespace {

RatVector parse_point(const std::string& text, std::size_t dim, const char* flag) {
    RatVector out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_rat(item));
    }
    if (out.size() != dim) {
        throw InputError(std::string(flag) + ": expected " + std::to_string(dim) +
                         " comma-separated coordinates, got '" + text + "'");
    }
    return out;
}

Polytope load_polytope(const RunConfig& c) {
    if (!c.inline_document.empty()) {
        return polytope_from_text(c.inline_document);
    }
    if (c.input_path.empty()) {
        throw InputError("no input document (use --input PATH or --doc JSON)");
    }
    std::stringstream buf;
    if (c.input_path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(c.input_path);
        if (!in) {
            throw InputError(c.input_path + ": cannot open input document");
        }
        buf << in.rdbuf();
    }
    try {
        return polytope_from_text(buf.str());
    } catch (const InputError& e) {
        throw InputError(c.input_path + ": " + e.what());
    }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string join(const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + "}";
}

int cmd_faces(const RunConfig& c, std::ostream& out) {
    const auto p = load_polytope(c);
    if (c.output_format == OutputFormat::json) {
        emit(out, faces_report(p));
        return exit_ok;
    }
    for (std::size_t i = 0; i < p.faces().size(); ++i) {
        const auto& f = p.face(i);
        out << i << "\tdim=" << f.dim << "\tvertices=" << join(f.vertices)
            << "\tfacets=" << join(f.facets) << '\n';
    }
    return exit_ok;
}

int cmd_complexes(const RunConfig& c, std::ostream& out) {
    const auto p = load_polytope(c);
    if (c.point.has_value() == c.direction.has_value()) {
        throw UsageError("complexes: give exactly one of --point or --direction");
    }
    std::vector<FaceSubset> classes;
    if (c.point) {
        const auto x = parse_point(*c.point, p.dim(), "--point");
        if (!p.contains(x)) {
            auto [vis, inv] = classify_visible(p, x);
            classes.push_back(std::move(vis));
            classes.push_back(std::move(inv));
        }
        auto [back, front] = classify_back(p, x);
        classes.push_back(std::move(back));
        classes.push_back(std::move(front));
    } else {
        const auto d = parse_point(*c.direction, p.dim(), "--direction");
        auto [low, up] = classify_lower(p, d);
        classes.push_back(std::move(low));
        classes.push_back(std::move(up));
    }
    if (c.output_format == OutputFormat::json) {
        Json j = Json::object();
        for (const auto& s : classes) {
            j[std::string(to_string(s.kind))] = subset_report(s);
        }
        emit(out, Json{{"classes", std::move(j)}});
        return exit_ok;
    }
    for (const auto& s : classes) {
        out << to_string(s.kind) << ": chi=" << euler_char(s) << '\n';
        for (auto i : s.members) {
            const auto& f = p.face(i);
            out << "  face " << i << " dim=" << f.dim << " vertices=" << join(f.vertices) << '\n';
        }
    }
    return exit_ok;
}

int cmd_gram(const RunConfig& c, std::ostream& out) {
    const auto p = load_polytope(c);
    const auto variant = parse_gram_variant(c.variant.value_or("P"));
    const Box box = c.box.value_or(default_box(p));
    if (box.dim() != p.dim()) {
        throw UsageError("--box has " + std::to_string(box.dim()) + " ranges, polytope has dimension " +
                         std::to_string(p.dim()));
    }
    const auto report = check_gram(p, box, variant);
    if (c.output_format == OutputFormat::json) {
        emit(out, gram_report(report));
    } else {
        out << "gram-check variant=" << to_string(variant) << " box=" << to_string(box)
            << (report.ok ? " ok" : " FAILED") << '\n';
        for (const auto& m : report.mismatches) {
            out << "  " << to_string(m.point) << " lhs=" << m.lhs << " rhs=" << m.rhs << '\n';
        }
    }
    return report.ok ? exit_ok : exit_violation;
}

int cmd_brion(const RunConfig& c, std::ostream& out) {
    const auto p = load_polytope(c);
    const auto variant = parse_brion_variant(c.variant.value_or("P"));
    if (c.trials < 1) {
        throw UsageError("--trials must be positive");
    }
    const auto report = check_brion(p, variant, c.trials, c.seed);
    if (c.output_format == OutputFormat::json) {
        emit(out, brion_report(report));
    } else {
        out << "brion-check variant=" << to_string(variant) << " trials=" << report.trials
            << " seed=" << report.seed << (report.ok ? " ok" : " FAILED") << '\n';
        for (const auto& f : report.failures) {
            out << "  t=" << to_string(f.point) << " lhs=" << to_string(f.lhs)
                << " rhs=" << to_string(f.rhs) << '\n';
        }
    }
    return report.ok ? exit_ok : exit_violation;
}

int cmd_sigma(const RunConfig& c, std::ostream& out) {
    const auto p = load_polytope(c);
    if (c.vertex >= p.vertices().size()) {
        throw UsageError("--vertex " + std::to_string(c.vertex) + " out of range (polytope has " +
                         std::to_string(p.vertices().size()) + " vertices)");
    }
    const auto d = decompose_vertex_cone(p, p.vertex_face(c.vertex), parse_shift_mode(c.mode),
                                         c.seed + c.vertex);
    if (c.output_format == OutputFormat::json) {
        Json j = decomposition_report(d);
        j["vertex"] = c.vertex;
        emit(out, j);
        return exit_ok;
    }
    out << "vertex " << c.vertex << " = " << to_string(p.vertices()[c.vertex])
        << " mode=" << to_string(d.mode) << " shift=" << to_string(d.shift) << '\n';
    out << "rays:";
    for (const auto& r : d.rays) {
        out << ' ' << to_string(r);
    }
    out << "\nxi: " << to_string(d.xi) << '\n';
    for (std::size_t i = 0; i < d.half_open.size(); ++i) {
        const auto& cell = d.half_open[i];
        out << "cell " << i << ": rays=" << join(d.cells[i]) << " open=";
        for (bool o : cell.open_mask) {
            out << (o ? '1' : '0');
        }
        out << "\n  numerator:";
        for (const auto& pt : d.rep.terms[i].numerator) {
            out << ' ' << to_string(pt);
        }
        out << "\n  denominator:";
        for (const auto& g : d.rep.terms[i].denominator) {
            out << " (1 - x^" << to_string(g) << ")";
        }
        out << '\n';
    }
    return exit_ok;
}

int cmd_count(const RunConfig& c, std::ostream& out) {
    const auto p = load_polytope(c);
    const auto pts = p.lattice_points();
    const auto interior = p.interior_lattice_points();
    std::vector<IntVector> neg_interior;
    for (const auto& a : interior) {
        neg_interior.push_back(negate(std::span<const Int>(a)));
    }
    std::sort(neg_interior.begin(), neg_interior.end(), LexLess{});
    if (c.output_format == OutputFormat::json) {
        Json a = Json::array();
        for (const auto& x : pts) {
            a.push_back(to_json(x));
        }
        Json b = Json::array();
        for (const auto& x : neg_interior) {
            b.push_back(to_json(x));
        }
        emit(out, Json{{"lattice_points", pts.size()},
                       {"points", std::move(a)},
                       {"interior_neg_lattice_points", neg_interior.size()},
                       {"interior_neg_points", std::move(b)}});
        return exit_ok;
    }
    out << "lattice points of P: " << pts.size() << '\n';
    out << "lattice points of int(-P): " << neg_interior.size() << '\n';
    return exit_ok;
}

int cmd_gen(const RunConfig& c, std::ostream& out) {
    GenSpec spec;
    spec.dim = c.gen_dim;
    spec.num_points = c.gen_points;
    spec.coord_bound = c.gen_bound;
    spec.rational_vertices = c.gen_rational;
    spec.seed = c.seed;
    emit(out, polytope_to_json(random_polytope(spec)));
    return exit_ok;
}

} // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        std::ostringstream buf;
        int code = exit_usage;
        if (config.subcommand == "faces") {
            code = cmd_faces(config, buf);
        } else if (config.subcommand == "complexes") {
            code = cmd_complexes(config, buf);
        } else if (config.subcommand == "gram-check") {
            code = cmd_gram(config, buf);
        } else if (config.subcommand == "brion-check") {
            code = cmd_brion(config, buf);
        } else if (config.subcommand == "sigma") {
            code = cmd_sigma(config, buf);
        } else if (config.subcommand == "count") {
            code = cmd_count(config, buf);
        } else if (config.subcommand == "gen") {
            code = cmd_gen(config, buf);
        } else {
            err << "error: unknown subcommand '" << config.subcommand << "'\n";
            return exit_usage;
        }
        out << buf.str();
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const GeometryError& e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_usage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lattice-point generating functions of rational polytopes"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string box_text;
    std::string format = "text";

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("-i,--input", cfg.input_path, "polytope document path, '-' for stdin");
        sub->add_option("--doc", cfg.inline_document, "inline polytope document");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* faces = app.add_subcommand("faces", "face lattice table");
    add_input(faces);

    auto* complexes = app.add_subcommand("complexes", "visibility classifications and chi");
    add_input(complexes);
    complexes->add_option("--point", cfg.point, "exterior point, e.g. 3,1/2");
    complexes->add_option("--direction", cfg.direction, "non-zero direction");

    auto* gram = app.add_subcommand("gram-check", "Brianchon-Gram identities on a box");
    add_input(gram);
    gram->add_option("--variant", cfg.variant)->check(CLI::IsMember({"P", "one", "intP"}));
    gram->add_option("--box", box_text, "lo1..hi1,lo2..hi2,...");

    auto* brion = app.add_subcommand("brion-check", "Brion identities at random points");
    add_input(brion);
    brion->add_option("--variant", cfg.variant)->check(CLI::IsMember({"P", "one", "intP"}));
    brion->add_option("--trials", cfg.trials);
    brion->add_option("--seed", cfg.seed);

    auto* sigma = app.add_subcommand("sigma", "vertex cone decomposition");
    add_input(sigma);
    sigma->add_option("--vertex", cfg.vertex, "vertex index");
    sigma->add_option("--mode", cfg.mode)->check(CLI::IsMember({"v", "0", "-v"}));
    sigma->add_option("--seed", cfg.seed);

    auto* count = app.add_subcommand("count", "lattice points of P and int(-P)");
    add_input(count);

    auto* gen = app.add_subcommand("gen", "random polytope document");
    gen->add_option("--dim", cfg.gen_dim);
    gen->add_option("--points", cfg.gen_points);
    gen->add_option("--bound", cfg.gen_bound);
    gen->add_option("--seed", cfg.seed);
    gen->add_flag("--rational", cfg.gen_rational, "coordinates in (1/4)Z");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.output_format = format == "json" ? OutputFormat::json : OutputFormat::text;
    if (!box_text.empty()) {
        try {
            cfg.box = parse_box(box_text);
        } catch (const UsageError& e) {
            err << "error: --box: " << e.what() << '\n';
            return exit_usage;
        }
    }
    return execute(cfg, out, err);
}

} // namespace brion::cli
