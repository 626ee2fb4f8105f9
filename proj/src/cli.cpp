#include "lefib/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace lefib {

namespace {

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, ParseCode::syntax, "cannot open input file " + path);
    return parse_document(in);
}

std::string rational_text(const Rat& r) {
    std::ostringstream os;
    if (denominator(r) == 1)
        os << numerator(r);
    else
        os << numerator(r) << "/" << denominator(r);
    return os.str();
}

void require_fibration(const Document& doc) {
    if (doc.fibrations.empty())
        throw std::invalid_argument("document contains no FIBRATION");
}

void require_presentation(const Document& doc) {
    if (doc.presentations.empty())
        throw std::invalid_argument("document contains no PRESENTATION");
}

int cmd_validate(const std::string& path, std::ostream& out) {
    Document doc = load_document(path);
    require_fibration(doc);
    bool all_ok = true;
    for (std::size_t i = 0; i < doc.fibrations.size(); ++i) {
        if (doc.fibrations.size() > 1)
            out << "fibration=" << (i + 1) << "\n";
        ValidationReport rep = validate(doc.resolve_fibration(i));
        out << "allowability=" << verdict_name(rep.allowability) << "\n";
        out << "closure=" << verdict_name(rep.closure) << "\n";
        out << "structure=" << verdict_name(rep.structure) << "\n";
        for (std::size_t b = 0; b < rep.boundary_monodromy_trivial.size(); ++b)
            out << "boundary_monodromy_" << (b + 1) << "="
                << (rep.boundary_monodromy_trivial[b] ? "trivial" : "nontrivial") << "\n";
        for (const std::string& d : rep.diagnostics)
            out << "diagnostic=" << d << "\n";
        out << "valid=" << (rep.ok() ? 1 : 0) << "\n";
        all_ok = all_ok && rep.ok();
    }
    return all_ok ? 0 : 1;
}

int cmd_invariants(const std::string& path, std::ostream& out) {
    Document doc = load_document(path);
    require_fibration(doc);
    for (std::size_t i = 0; i < doc.fibrations.size(); ++i) {
        if (doc.fibrations.size() > 1)
            out << "fibration=" << (i + 1) << "\n";
        FibrationData f = doc.resolve_fibration(i);
        auto [np, nm] = critical_counts(f);
        out << "chi=" << euler_characteristic(f) << "\n";
        out << "n_plus=" << np << "\n";
        out << "n_minus=" << nm << "\n";
        out << "eta=" << (np - nm) << "\n";
    }
    return 0;
}

int cmd_signature(const std::string& path, std::ostream& out) {
    Document doc = load_document(path);
    require_fibration(doc);
    for (std::size_t i = 0; i < doc.fibrations.size(); ++i) {
        if (doc.fibrations.size() > 1)
            out << "fibration=" << (i + 1) << "\n";
        out << "sigma=" << fibration_signature(doc.resolve_fibration(i)) << "\n";
    }
    return 0;
}

int cmd_fibersum(const std::string& path1, const std::string& path2, const std::string& glue,
                 std::ostream& out) {
    Document d1 = load_document(path1);
    Document d2 = load_document(path2);
    require_fibration(d1);
    require_fibration(d2);
    TwistWord gluing;
    if (!glue.empty()) {
        const TwistWord* w = d1.find_word(glue);
        if (!w)
            w = d2.find_word(glue);
        if (!w)
            throw std::invalid_argument("gluing word '" + glue + "' not defined in either document");
        gluing = *w;
    }
    FibrationData sum = fiber_sum(d1.resolve_fibration(0), d2.resolve_fibration(0), gluing);
    out << print_document(document_from_fibrations({sum}));
    return 0;
}

int cmd_hurwitz(const std::string& path, long index, const std::string& direction, std::ostream& out) {
    Document doc = load_document(path);
    require_fibration(doc);
    if (index < 1)
        throw std::invalid_argument("hurwitz index is 1-based");
    HurwitzDirection dir;
    if (direction == "right")
        dir = HurwitzDirection::right;
    else if (direction == "left")
        dir = HurwitzDirection::left;
    else
        throw std::invalid_argument("direction must be 'left' or 'right'");
    FibrationData f = hurwitz_move(doc.resolve_fibration(0), static_cast<std::size_t>(index - 1), dir);
    out << print_document(document_from_fibrations({f}));
    return 0;
}

int cmd_cover(const std::string& path, int degree, const std::vector<std::string>& perm_args,
              std::ostream& out) {
    Document doc = load_document(path);
    require_fibration(doc);
    const FibrationRecord& rec = doc.fibrations.front();
    FibrationData f = doc.resolve_fibration(0);

    CoverSpec cover;
    cover.degree = degree;
    for (const std::string& arg : perm_args) {
        auto eq = arg.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected --perm <bundle word name>=<image list>");
        std::string name = arg.substr(0, eq);
        std::size_t idx = rec.bundle.size();
        for (std::size_t i = 0; i < rec.bundle.size(); ++i)
            if (rec.bundle[i] == name)
                idx = i;
        if (idx == rec.bundle.size())
            throw std::invalid_argument("'" + name + "' is not a bundle word of the fibration (meridians "
                                        "cannot carry a permutation: the cover is unbranched)");
        std::vector<int> perm;
        std::istringstream is(arg.substr(eq + 1));
        std::string part;
        while (std::getline(is, part, ',')) {
            try {
                perm.push_back(std::stoi(part) - 1);  // 1-based images in the input
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed permutation entry '" + part + "'");
            }
        }
        cover.generator_perms[idx] = std::move(perm);
    }

    std::vector<FibrationData> lifted = pullback_cover(f, cover);
    Document result = document_from_fibrations(lifted);
    result.report.emplace_back("components", std::to_string(lifted.size()));
    out << print_document(result);
    return 0;
}

int cmd_universal2(const std::string& path, std::ostream& out) {
    Document doc = load_document(path);
    require_presentation(doc);
    Presentation p = doc.resolve_presentation(0);
    PresentationReport prep = validate_presentation(p);
    if (!prep.ok()) {
        for (const auto& item : prep.generator_checks)
            out << "generator_" << item.name << "=" << (item.pass ? "pass" : "fail") << "\n";
        for (const auto& item : prep.relator_checks)
            out << "relator_" << item.name << "=" << (item.pass ? "pass" : "fail") << "\n";
        out << "presentation_valid=0\n";
        return 1;
    }
    UniversalData2 u = build_universal_dim2(p);
    out << "critical_disks=" << u.critical_disks << "\n";
    out << "relator_handles=" << u.relator_loops.size() << "\n";
    out << "h2_rank=" << u.h2_rank << "\n";
    out << "torus_amendment=" << (u.torus_amendment ? 1 : 0) << "\n";
    UniversalityReport2 rep = universality_report_dim2(u);
    for (const ConditionReport& c : rep.conditions)
        out << "cond_" << c.name << "=" << condition_status_name(c.status) << "\n";
    out << "all_pass=" << (rep.all_ok() ? 1 : 0) << "\n";
    return rep.all_ok() ? 0 : 1;
}

int cmd_universal3(const std::string& path, const std::string& marked, const std::string& spheres,
                   std::ostream& out) {
    Document doc = load_document(path);
    require_presentation(doc);
    Presentation p = doc.resolve_presentation(0);
    auto split_list = [](const std::string& s) {
        std::vector<std::string> out_list;
        std::istringstream is(s);
        std::string part;
        while (std::getline(is, part, ','))
            if (!part.empty())
                out_list.push_back(part);
        return out_list;
    };
    HandlePlan3 plan = build_universal_dim3_plan(p, split_list(marked), split_list(spheres));
    UniversalityReport3 rep = universality_report_dim3(plan);

    Document result;
    result.surface = p.fiber;
    PlanRecord prec;
    prec.disk_count = plan.disk_count;
    prec.steps = plan.steps;
    result.plans.push_back(std::move(prec));
    for (const ConditionReport& c : rep.conditions)
        result.report.emplace_back("cond_" + c.name, condition_status_name(c.status));
    result.report.emplace_back("all_pass", rep.all_ok() ? "1" : "0");
    out << print_document(result);
    return rep.all_ok() ? 0 : 1;
}

int cmd_cobordism_report(const std::string& path, std::ostream& out) {
    Document doc = load_document(path);
    require_presentation(doc);
    UniversalData2 u = build_universal_dim2(doc.resolve_presentation(0));
    CobordismImageReport rep = cobordism_image_report(u);
    for (std::size_t i = 0; i < rep.relator_names.size(); ++i) {
        out << rep.relator_names[i] << "_sigma=" << rep.sigma_eta[i].first << "\n";
        out << rep.relator_names[i] << "_eta=" << rep.sigma_eta[i].second << "\n";
    }
    out << "lattice_rank=" << rep.lattice.rows.size() << "\n";
    for (std::size_t i = 0; i < rep.lattice.rows.size(); ++i)
        out << "lattice_basis_" << (i + 1) << "=" << rep.lattice.rows[i][0] << ","
            << rep.lattice.rows[i][1] << "\n";
    return 0;
}

int cmd_calibrate(std::ostream& out) {
    const LocalTerms& lt = calibrate_local_terms();
    out << "c_plus=" << rational_text(lt.c_plus) << "\n";
    out << "c_minus=" << rational_text(lt.c_minus) << "\n";
    out << "check_k3=pass\n";
    out << "check_reverse=pass\n";
    out << "check_cancelling_pair=pass\n";
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Combinatorial calculus of Lefschetz fibrations over surfaces"};
    app.require_subcommand(1);

    std::string file, file2, glue, direction = "right", marked, spheres;
    long index = 1;
    int degree = 1;
    std::vector<std::string> perms;

    CLI::App* validate_cmd = app.add_subcommand("validate", "check a fibration document");
    validate_cmd->add_option("file", file)->required();

    CLI::App* invariants_cmd = app.add_subcommand("invariants", "chi, critical counts and eta");
    invariants_cmd->add_option("file", file)->required();

    CLI::App* signature_cmd = app.add_subcommand("signature", "signature of the closed total space");
    signature_cmd->add_option("file", file)->required();

    CLI::App* fibersum_cmd = app.add_subcommand("fibersum", "fiber sum of the first fibrations of two documents");
    fibersum_cmd->add_option("file1", file)->required();
    fibersum_cmd->add_option("file2", file2)->required();
    fibersum_cmd->add_option("--glue", glue, "gluing word name");

    CLI::App* hurwitz_cmd = app.add_subcommand("hurwitz", "apply one Hurwitz move");
    hurwitz_cmd->add_option("file", file)->required();
    hurwitz_cmd->add_option("--index", index, "1-based position")->required();
    hurwitz_cmd->add_option("--direction", direction, "left or right");

    CLI::App* cover_cmd = app.add_subcommand("cover", "pullback along a finite cover of the base");
    cover_cmd->add_option("file", file)->required();
    cover_cmd->add_option("--degree", degree, "covering degree")->required();
    cover_cmd->add_option("--perm", perms, "<bundle word>=<comma list of 1-based images>");

    CLI::App* universal2_cmd = app.add_subcommand("universal2", "dimension-2 universal construction report");
    universal2_cmd->add_option("file", file)->required();

    CLI::App* universal3_cmd = app.add_subcommand("universal3-plan", "dimension-3 handle plan");
    universal3_cmd->add_option("file", file)->required();
    universal3_cmd->add_option("--marked", marked, "marked mapping class group generator labels")->required();
    universal3_cmd->add_option("--spheres", spheres, "declared ker omega^s sphere labels");

    CLI::App* cobordism_cmd = app.add_subcommand("cobordism-report", "per-relator invariants and image lattice");
    cobordism_cmd->add_option("file", file)->required();

    app.add_subcommand("calibrate", "local signature terms and their cross-checks");

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    storage.insert(storage.begin(), "lefib");
    argv.reserve(storage.size());
    for (std::string& s : storage)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand("validate"))
            return cmd_validate(file, out);
        if (app.got_subcommand("invariants"))
            return cmd_invariants(file, out);
        if (app.got_subcommand("signature"))
            return cmd_signature(file, out);
        if (app.got_subcommand("fibersum"))
            return cmd_fibersum(file, file2, glue, out);
        if (app.got_subcommand("hurwitz"))
            return cmd_hurwitz(file, index, direction, out);
        if (app.got_subcommand("cover"))
            return cmd_cover(file, degree, perms, out);
        if (app.got_subcommand("universal2"))
            return cmd_universal2(file, out);
        if (app.got_subcommand("universal3-plan"))
            return cmd_universal3(file, marked, spheres, out);
        if (app.got_subcommand("cobordism-report"))
            return cmd_cobordism_report(file, out);
        if (app.got_subcommand("calibrate"))
            return cmd_calibrate(out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const CalibrationError& e) {
        err << "calibration failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace lefib
