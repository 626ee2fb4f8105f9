#include "lefib/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lefib {

const char* parse_code_name(ParseCode c) {
    switch (c) {
        case ParseCode::version: return "version";
        case ParseCode::syntax: return "syntax";
        case ParseCode::unknown_curve: return "unknown-curve";
        case ParseCode::unknown_word: return "unknown-word";
        case ParseCode::duplicate_name: return "duplicate-name";
        case ParseCode::malformed_vector: return "malformed-vector";
        default: return "semantic";
    }
}

ParseError::ParseError(std::size_t line_, ParseCode code_, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_) + ": [" + parse_code_name(code_) + "] " + message),
      line(line_),
      code(code_) {}

bool FibrationRecord::operator==(const FibrationRecord& o) const {
    return base_genus == o.base_genus && base_boundary == o.base_boundary && twist == o.twist &&
           lefschetz == o.lefschetz && bundle == o.bundle && declared_surjective == o.declared_surjective;
}

bool PlanRecord::operator==(const PlanRecord& o) const {
    if (disk_count != o.disk_count || steps.size() != o.steps.size())
        return false;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i].kind != o.steps[i].kind || steps[i].first != o.steps[i].first ||
            steps[i].second != o.steps[i].second || steps[i].label != o.steps[i].label)
            return false;
    }
    return true;
}

bool Document::operator==(const Document& o) const {
    if (format_version != o.format_version)
        return false;
    if (surface.has_value() != o.surface.has_value())
        return false;
    if (surface && !(*surface == *o.surface))
        return false;
    if (curves.size() != o.curves.size())
        return false;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if (curves[i].name != o.curves[i].name || curves[i].homology != o.curves[i].homology ||
            curves[i].separating != o.curves[i].separating || curves[i].essential != o.curves[i].essential)
            return false;
    }
    if (words.size() != o.words.size())
        return false;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i].first != o.words[i].first || !(words[i].second == o.words[i].second))
            return false;
    }
    return fibrations == o.fibrations && presentations == o.presentations && plans == o.plans &&
           report == o.report;
}

const CurveClass* Document::find_curve(const std::string& name) const {
    for (const CurveClass& c : curves)
        if (c.name == name)
            return &c;
    return nullptr;
}

const TwistWord* Document::find_word(const std::string& name) const {
    for (const auto& [n, w] : words)
        if (n == name)
            return &w;
    return nullptr;
}

FibrationData Document::resolve_fibration(std::size_t index) const {
    const FibrationRecord& rec = fibrations.at(index);
    if (!surface)
        throw std::invalid_argument("document has no SURFACE section");
    const TwistWord* lef = find_word(rec.lefschetz);
    if (!lef)
        throw std::invalid_argument("unknown lefschetz word " + rec.lefschetz);
    std::vector<TwistWord> bundle;
    for (const std::string& name : rec.bundle) {
        const TwistWord* w = find_word(name);
        if (!w)
            throw std::invalid_argument("unknown bundle word " + name);
        bundle.push_back(*w);
    }
    Pi1Element tw = rec.twist.empty() ? Pi1Element::zero_for(*surface) : Pi1Element::make(*surface, rec.twist);
    FibrationData f = make_fibration(*surface, BaseSurface(rec.base_genus, rec.base_boundary), *lef,
                                     std::move(bundle), std::move(tw));
    f.declared_lefschetz_surjective = rec.declared_surjective;
    return f;
}

Presentation Document::resolve_presentation(std::size_t index) const {
    const PresentationRecord& rec = presentations.at(index);
    if (!surface)
        throw std::invalid_argument("document has no SURFACE section");
    Presentation p;
    p.fiber = *surface;
    for (const std::string& name : rec.generators) {
        const CurveClass* c = find_curve(name);
        if (!c)
            throw std::invalid_argument("unknown generator curve " + name);
        p.generators.push_back(*c);
    }
    for (const std::string& name : rec.relators) {
        const TwistWord* w = find_word(name);
        if (!w)
            throw std::invalid_argument("unknown relator word " + name);
        p.relator_names.push_back(name);
        p.relators.push_back(*w);
    }
    return p;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t)
        out.push_back(t);
    return out;
}

long parse_long(const std::string& s, std::size_t line, const char* what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, ParseCode::syntax, std::string("expected an integer for ") + what + ", got '" + s + "'");
    }
}

IntVec parse_vector(const std::string& s, std::size_t line) {
    IntVec out;
    if (s.empty())
        return out;
    for (const std::string& part : split(s, ',')) {
        try {
            out.emplace_back(Int(part));
        } catch (const std::exception&) {
            throw ParseError(line, ParseCode::malformed_vector, "malformed integer vector '" + s + "'");
        }
    }
    return out;
}

std::vector<std::string> parse_name_list(const std::string& s) {
    std::vector<std::string> out;
    if (s.empty())
        return out;
    for (const std::string& part : split(s, ','))
        out.push_back(part);
    return out;
}

// key=value pieces after the line keyword
std::map<std::string, std::string> keyvals(const std::vector<std::string>& toks, std::size_t from,
                                           std::size_t line) {
    std::map<std::string, std::string> kv;
    for (std::size_t i = from; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos)
            throw ParseError(line, ParseCode::syntax, "expected key=value, got '" + toks[i] + "'");
        kv[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
    }
    return kv;
}

std::string require(std::map<std::string, std::string>& kv, const std::string& key, std::size_t line) {
    auto it = kv.find(key);
    if (it == kv.end())
        throw ParseError(line, ParseCode::syntax, "missing required key '" + key + "'");
    return it->second;
}

HandleStep::Kind step_kind_from(const std::string& s, std::size_t line) {
    if (s == "band")
        return HandleStep::Kind::band;
    if (s == "one_handle")
        return HandleStep::Kind::one_handle;
    if (s == "two_handle")
        return HandleStep::Kind::two_handle;
    if (s == "fibersum_torus_bundle")
        return HandleStep::Kind::fibersum_torus_bundle;
    if (s == "three_handle")
        return HandleStep::Kind::three_handle;
    throw ParseError(line, ParseCode::syntax, "unknown plan step kind '" + s + "'");
}

const char* step_kind_name(HandleStep::Kind k) {
    switch (k) {
        case HandleStep::Kind::band: return "band";
        case HandleStep::Kind::one_handle: return "one_handle";
        case HandleStep::Kind::two_handle: return "two_handle";
        case HandleStep::Kind::fibersum_torus_bundle: return "fibersum_torus_bundle";
        default: return "three_handle";
    }
}

}  // namespace

Document parse_document(std::istream& in) {
    Document doc;
    bool version_seen = false;
    std::string raw;
    std::size_t lineno = 0;
    PlanRecord* open_plan = nullptr;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        std::vector<std::string> toks = tokens(line);
        if (toks.empty())
            continue;

        if (!version_seen) {
            if (toks[0] != "LEFIB")
                throw ParseError(lineno, ParseCode::version, "document must start with 'LEFIB 1'");
            if (toks.size() != 2 || toks[1] != "1")
                throw ParseError(lineno, ParseCode::version,
                                 "unrecognized format version '" + (toks.size() > 1 ? toks[1] : "") + "'");
            version_seen = true;
            doc.format_version = toks[1];
            continue;
        }

        const std::string& tag = toks[0];
        if (tag != "PLANSTEP")
            open_plan = nullptr;

        if (tag == "SURFACE") {
            if (doc.surface)
                throw ParseError(lineno, ParseCode::duplicate_name, "duplicate SURFACE section");
            auto kv = keyvals(toks, 1, lineno);
            long g = parse_long(require(kv, "g", lineno), lineno, "g");
            long b = parse_long(require(kv, "b", lineno), lineno, "b");
            try {
                doc.surface = FiberSurface(static_cast<int>(g), static_cast<int>(b));
            } catch (const std::exception& e) {
                throw ParseError(lineno, ParseCode::semantic, e.what());
            }
        } else if (tag == "CURVE") {
            if (toks.size() < 2)
                throw ParseError(lineno, ParseCode::syntax, "CURVE needs a name");
            if (!doc.surface)
                throw ParseError(lineno, ParseCode::semantic, "CURVE before SURFACE");
            std::string name = toks[1];
            if (doc.find_curve(name))
                throw ParseError(lineno, ParseCode::duplicate_name, "curve '" + name + "' already defined");
            auto kv = keyvals(toks, 2, lineno);
            IntVec hom = parse_vector(require(kv, "homology", lineno), lineno);
            long sep = parse_long(require(kv, "sep", lineno), lineno, "sep");
            try {
                if (doc.surface->symplectic_enabled()) {
                    CurveClass c = CurveClass::on(*doc.surface, name, hom);
                    if (c.separating != (sep != 0))
                        throw std::invalid_argument("sep flag contradicts the homology class");
                    doc.curves.push_back(std::move(c));
                } else {
                    if (!hom.empty())
                        throw std::invalid_argument(
                            "homology coordinates are only available for fibers with b in {0,1}");
                    bool ess = true;
                    if (auto it = kv.find("ess"); it != kv.end())
                        ess = parse_long(it->second, lineno, "ess") != 0;
                    else
                        ess = (sep == 0);
                    doc.curves.push_back(CurveClass::declared(name, sep != 0, ess));
                }
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception& e) {
                throw ParseError(lineno, ParseCode::semantic, e.what());
            }
        } else if (tag == "WORD") {
            if (toks.size() < 3 || toks[2] != "=")
                throw ParseError(lineno, ParseCode::syntax, "expected 'WORD <name> = <letters>'");
            std::string name = toks[1];
            if (doc.find_word(name))
                throw ParseError(lineno, ParseCode::duplicate_name, "word '" + name + "' already defined");
            TwistWord w;
            for (std::size_t i = 3; i < toks.size(); ++i) {
                std::string letter = toks[i];
                int sign = 1;
                if (letter.size() > 3 && letter.substr(letter.size() - 3) == "^-1") {
                    sign = -1;
                    letter = letter.substr(0, letter.size() - 3);
                }
                const CurveClass* c = doc.find_curve(letter);
                if (!c)
                    throw ParseError(lineno, ParseCode::unknown_curve, "unknown curve '" + letter + "'");
                w.letters.emplace_back(*c, sign);
            }
            doc.words.emplace_back(std::move(name), std::move(w));
        } else if (tag == "FIBRATION") {
            auto kv = keyvals(toks, 1, lineno);
            FibrationRecord rec;
            rec.base_genus = static_cast<int>(parse_long(require(kv, "base_genus", lineno), lineno, "base_genus"));
            rec.base_boundary =
                static_cast<int>(parse_long(require(kv, "base_bdry", lineno), lineno, "base_bdry"));
            if (auto it = kv.find("twist"); it != kv.end())
                rec.twist = parse_vector(it->second, lineno);
            rec.lefschetz = require(kv, "lefschetz", lineno);
            if (!doc.find_word(rec.lefschetz))
                throw ParseError(lineno, ParseCode::unknown_word, "unknown word '" + rec.lefschetz + "'");
            if (auto it = kv.find("bundle"); it != kv.end()) {
                rec.bundle = parse_name_list(it->second);
                for (const std::string& n : rec.bundle)
                    if (!doc.find_word(n))
                        throw ParseError(lineno, ParseCode::unknown_word, "unknown word '" + n + "'");
            }
            if (auto it = kv.find("declared_surjective"); it != kv.end())
                rec.declared_surjective = parse_long(it->second, lineno, "declared_surjective") != 0;
            doc.fibrations.push_back(std::move(rec));
            try {
                doc.resolve_fibration(doc.fibrations.size() - 1);
            } catch (const std::exception& e) {
                throw ParseError(lineno, ParseCode::semantic, e.what());
            }
        } else if (tag == "PRESENTATION") {
            auto kv = keyvals(toks, 1, lineno);
            PresentationRecord rec;
            rec.generators = parse_name_list(require(kv, "gens", lineno));
            rec.relators = parse_name_list(require(kv, "relators", lineno));
            for (const std::string& n : rec.generators)
                if (!doc.find_curve(n))
                    throw ParseError(lineno, ParseCode::unknown_curve, "unknown curve '" + n + "'");
            for (const std::string& n : rec.relators)
                if (!doc.find_word(n))
                    throw ParseError(lineno, ParseCode::unknown_word, "unknown word '" + n + "'");
            doc.presentations.push_back(std::move(rec));
        } else if (tag == "PLAN") {
            auto kv = keyvals(toks, 1, lineno);
            PlanRecord rec;
            rec.disk_count =
                static_cast<std::size_t>(parse_long(require(kv, "disks", lineno), lineno, "disks"));
            doc.plans.push_back(std::move(rec));
            open_plan = &doc.plans.back();
        } else if (tag == "PLANSTEP") {
            if (!open_plan)
                throw ParseError(lineno, ParseCode::semantic, "PLANSTEP outside a PLAN section");
            if (toks.size() < 2)
                throw ParseError(lineno, ParseCode::syntax, "PLANSTEP needs a step kind");
            HandleStep s;
            s.kind = step_kind_from(toks[1], lineno);
            if (s.kind == HandleStep::Kind::band) {
                if (toks.size() != 4)
                    throw ParseError(lineno, ParseCode::syntax, "expected 'PLANSTEP band <i> <j>'");
                s.first = static_cast<std::size_t>(parse_long(toks[2], lineno, "band endpoint"));
                s.second = static_cast<std::size_t>(parse_long(toks[3], lineno, "band endpoint"));
            } else {
                if (toks.size() != 3)
                    throw ParseError(lineno, ParseCode::syntax, "expected 'PLANSTEP <kind> <label>'");
                s.label = toks[2];
            }
            open_plan->steps.push_back(std::move(s));
        } else if (tag == "REPORT") {
            auto kv = keyvals(toks, 1, lineno);
            for (const auto& [k, v] : kv)
                doc.report.emplace_back(k, v);
        } else {
            throw ParseError(lineno, ParseCode::syntax, "unknown line tag '" + tag + "'");
        }
    }
    if (!version_seen)
        throw ParseError(lineno == 0 ? 1 : lineno, ParseCode::version, "empty document, expected 'LEFIB 1'");
    return doc;
}

Document parse_document(const std::string& text) {
    std::istringstream is(text);
    return parse_document(is);
}

namespace {

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out.push_back(sep);
        out += parts[i];
    }
    return out;
}

std::string vector_text(const IntVec& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << ',';
        os << v[i];
    }
    return os.str();
}

}  // namespace

std::string print_document(const Document& d) {
    std::ostringstream os;
    os << "LEFIB " << d.format_version << "\n";
    if (d.surface)
        os << "SURFACE g=" << d.surface->genus << " b=" << d.surface->boundary_count << "\n";
    for (const CurveClass& c : d.curves) {
        os << "CURVE " << c.name << " homology=" << vector_text(c.homology.coords) << " sep="
           << (c.separating ? 1 : 0);
        if (d.surface && !d.surface->symplectic_enabled())
            os << " ess=" << (c.essential ? 1 : 0);
        os << "\n";
    }
    for (const auto& [name, w] : d.words) {
        os << "WORD " << name << " =";
        for (const SignedTwist& t : w.letters) {
            os << ' ' << t.curve.name;
            if (t.sign < 0)
                os << "^-1";
        }
        os << "\n";
    }
    for (const FibrationRecord& rec : d.fibrations) {
        os << "FIBRATION base_genus=" << rec.base_genus << " base_bdry=" << rec.base_boundary;
        if (!rec.twist.empty())
            os << " twist=" << vector_text(rec.twist);
        os << " lefschetz=" << rec.lefschetz << " bundle=" << join(rec.bundle, ',');
        if (rec.declared_surjective)
            os << " declared_surjective=1";
        os << "\n";
    }
    for (const PresentationRecord& rec : d.presentations)
        os << "PRESENTATION gens=" << join(rec.generators, ',') << " relators=" << join(rec.relators, ',')
           << "\n";
    for (const PlanRecord& rec : d.plans) {
        os << "PLAN disks=" << rec.disk_count << "\n";
        for (const HandleStep& s : rec.steps) {
            os << "PLANSTEP " << step_kind_name(s.kind);
            if (s.kind == HandleStep::Kind::band)
                os << ' ' << s.first << ' ' << s.second;
            else
                os << ' ' << s.label;
            os << "\n";
        }
    }
    for (const auto& [k, v] : d.report)
        os << "REPORT " << k << "=" << v << "\n";
    return os.str();
}

Document document_from_fibrations(const std::vector<FibrationData>& fs) {
    Document doc;
    if (fs.empty())
        return doc;
    doc.surface = fs.front().fiber;

    auto curve_key = [&](const CurveClass& c) {
        return vector_text(c.homology.coords) + "|" + (c.separating ? "1" : "0") + "|" +
               (c.essential ? "1" : "0");
    };
    std::map<std::string, std::string> curve_names;  // key -> emitted name

    auto intern_curve = [&](const CurveClass& c) -> std::string {
        std::string key = curve_key(c);
        auto it = curve_names.find(key);
        if (it != curve_names.end())
            return it->second;
        CurveClass stored = c;
        std::string base = doc.surface->symplectic_enabled() ? canonical_curve_name(c.homology) : c.name;
        std::string name = base;
        int suffix = 2;
        while (doc.find_curve(name))
            name = base + "_" + std::to_string(suffix++);
        stored.name = name;
        doc.curves.push_back(std::move(stored));
        curve_names.emplace(std::move(key), name);
        return name;
    };
    auto intern_word = [&](const std::string& name, const TwistWord& w) {
        TwistWord stored;
        for (const SignedTwist& t : w.letters) {
            CurveClass c = t.curve;
            c.name = intern_curve(c);
            stored.letters.emplace_back(std::move(c), t.sign);
        }
        doc.words.emplace_back(name, std::move(stored));
    };

    for (std::size_t i = 0; i < fs.size(); ++i) {
        const FibrationData& f = fs[i];
        if (!(f.fiber == *doc.surface))
            throw std::invalid_argument("document_from_fibrations: mixed fibers");
        const std::string suffix = std::to_string(i + 1);
        FibrationRecord rec;
        rec.base_genus = f.base.genus;
        rec.base_boundary = f.base.boundary_count;
        rec.twist = f.structure_twist.coords;
        rec.lefschetz = "lef" + suffix;
        intern_word(rec.lefschetz, f.lefschetz_word);
        for (std::size_t j = 0; j < f.bundle_words.size(); ++j) {
            std::string wname = "bw" + suffix + "_" + std::to_string(j + 1);
            intern_word(wname, f.bundle_words[j]);
            rec.bundle.push_back(std::move(wname));
        }
        rec.declared_surjective = f.declared_lefschetz_surjective;
        doc.fibrations.push_back(std::move(rec));
    }
    return doc;
}

}  // namespace lefib
