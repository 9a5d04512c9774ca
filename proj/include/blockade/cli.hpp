#pragma once

#include "json_io.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace blockade::cli {

using io::json;

constexpr const char* kSchemaTag = "blockade.report/1";

/// Envelope written by every subcommand: schema tag, the command line that
/// produced it, a digest of all inputs (arguments and file bytes), and either
/// a result or an error payload. Round-trips losslessly through JSON.
struct Report {
    std::string schema = kSchemaTag;
    std::vector<std::string> command;
    std::string inputs_digest;
    json result;  // null when error is set
    json error;   // null when result is set

    json to_json() const {
        json out{{"schema", schema},
                 {"command", command},
                 {"inputs_digest", inputs_digest}};
        if (error.is_null())
            out["result"] = result;
        else
            out["error"] = error;
        return out;
    }

    static Report from_json(const json& j) {
        Report r;
        r.schema = j.at("schema").get<std::string>();
        r.command = j.at("command").get<std::vector<std::string>>();
        r.inputs_digest = j.at("inputs_digest").get<std::string>();
        if (j.contains("error"))
            r.error = j.at("error");
        else
            r.result = j.at("result");
        return r;
    }

    friend bool operator==(const Report& a, const Report& b) {
        return a.to_json() == b.to_json();
    }
};

namespace detail {

class InputDigest {
  public:
    void feed(const std::string& data) {
        for (unsigned char c : data) {
            state_ ^= c;
            state_ *= 1099511628211ULL;  // FNV-1a 64
        }
        state_ ^= 0xff;
        state_ *= 1099511628211ULL;
    }
    std::string hex() const {
        std::ostringstream os;
        os << std::hex << std::setfill('0') << std::setw(16) << state_;
        return os.str();
    }

  private:
    std::uint64_t state_ = 14695981039346656037ULL;
};

inline json big_to_json(const Int& v) {
    if (v.fits_slong_p())
        return json(v.get_si());
    return json(v.get_str());
}

inline std::vector<long long> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string piece = text.substr(pos, comma == std::string::npos ? comma
                                                                              : comma - pos);
        if (piece.empty() || piece.find_first_not_of("-0123456789") != std::string::npos ||
            piece.find_first_of("0123456789") == std::string::npos ||
            (piece.size() > 1 && piece.find('-', 1) != std::string::npos))
            throw invalid_input(what + ": '" + text + "' is not a comma-separated integer list");
        try {
            out.push_back(std::stoll(piece));
        } catch (const std::exception&) {
            throw invalid_input(what + ": '" + piece + "' is out of range");
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

inline Weight parse_weight_arg(const std::string& text, const std::string& what) {
    return Weight(parse_int_list(text, what));
}

inline ExtDimension parse_ext_dimension(const std::string& text, const std::string& what) {
    if (text == "inf" || text == "infinite")
        return ExtDimension::infinity();
    const auto list = parse_int_list(text, what);
    if (list.size() != 1 || list[0] < 0)
        throw invalid_input(what + ": expected a nonnegative integer or 'inf'");
    return ExtDimension::finite(list[0]);
}

struct FileLoader {
    InputDigest* digest;

    json load(const std::string& path) const {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw invalid_input(path + ": cannot read file");
        std::ostringstream buf;
        buf << in.rdbuf();
        const std::string text = buf.str();
        digest->feed(text);
        try {
            return json::parse(text);
        } catch (const json::parse_error& e) {
            throw invalid_input(path + ": " + e.what());
        }
    }
};

inline std::vector<EvalModuleDescriptor> parse_module_list(const json& j,
                                                           const std::string& path) {
    if (!j.is_array())
        throw io::bad(path, "expected an array of module descriptors");
    std::vector<EvalModuleDescriptor> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(io::parse_module_descriptor(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

inline json ext_dimension_to_json(const ExtDimension& d) {
    return d.infinite ? json("infinite") : json(d.value);
}

// ---- pretty renderings ------------------------------------------------

inline std::string render_row(const std::vector<long long>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? " " : "") << v[i];
    os << ']';
    return os.str();
}

inline void pretty_roots(const RootSystem& rs, std::ostream& out) {
    out << "root system " << rs.name() << " (rank " << rs.rank() << ")\n";
    out << "cartan matrix:\n";
    for (const auto& row : rs.cartan())
        out << "  " << render_row(row) << "\n";
    out << "positive roots (" << rs.positive_roots().size() << "), simple-root coordinates:\n";
    for (const auto& r : rs.positive_roots())
        out << "  " << render_row(r) << "\n";
    out << "highest root: " << render_row(rs.highest_root()) << "\n";
    const auto& shape = rs.fundamental_group_shape();
    long long order = 1;
    out << "fundamental group P/Q: ";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        out << (i ? " x " : "") << "Z" << shape[i];
        order *= shape[i];
    }
    out << " (order " << order << ")\n";
}

inline void pretty_multiset(const WeightMultiset& ws, const char* head, std::ostream& out) {
    out << head << ":\n";
    for (const auto& [w, m] : ws.entries)
        out << "  " << to_string(w) << "  x" << m << "\n";
}

// ---- subcommand handlers ----------------------------------------------

struct Options {
    std::string type_text;
    int rank = 0;
    std::string lam_text, mu_text;
    std::string space_path, left_path, right_path, modules_path;
    std::string ev_a_path, ev_b_path;
    long long bound = 0;
    std::string dimz_text, dims_text;
    std::string label_a, label_b;
    std::string central_a, central_b;
    std::string weight_a_text, weight_b_text;
    long long combine_r = 0, combine_quot = 0;
    bool nontrivial = false;
    bool pretty = false;
};

inline RootSystem system_of(const Options& o) {
    if (o.type_text.size() != 1)
        throw invalid_input("type '" + o.type_text + "' must be a single letter A..G");
    return build_root_system(o.type_text[0], o.rank);
}

}  // namespace detail

/// Entry point shared by the binary and the tests. args excludes the program
/// name. Output is deterministic: identical inputs produce identical bytes.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    detail::Options o;
    detail::InputDigest digest;
    for (const auto& a : args)
        digest.feed(a);
    detail::FileLoader files{&digest};

    CLI::App app{"exact root-system combinatorics, extension dimensions and block "
                 "decompositions for twisted current algebras"};
    app.name("blockade");
    app.require_subcommand(1);

    auto add_type_rank = [&](CLI::App* cmd) {
        cmd->add_option("type", o.type_text, "root system type letter A..G")->required();
        cmd->add_option("rank", o.rank, "root system rank")->required();
    };
    auto add_pretty = [&](CLI::App* cmd) {
        cmd->add_flag("--pretty", o.pretty, "human-readable table instead of the JSON report");
    };

    CLI::App* roots = app.add_subcommand("roots", "Cartan datum, positive roots, P/Q");
    add_type_rank(roots);
    add_pretty(roots);

    CLI::App* dim = app.add_subcommand("dim", "dimension of the simple module L(lam)");
    add_type_rank(dim);
    dim->add_option("--lam", o.lam_text, "highest weight, comma-separated coordinates")
        ->required();
    add_pretty(dim);

    CLI::App* tensor = app.add_subcommand("tensor", "decomposition of L(lam) (x) L(mu)");
    add_type_rank(tensor);
    tensor->add_option("--lam", o.lam_text)->required();
    tensor->add_option("--mu", o.mu_text)->required();
    add_pretty(tensor);

    CLI::App* freud = app.add_subcommand("freudenthal", "weight diagram of L(lam)");
    add_type_rank(freud);
    freud->add_option("--lam", o.lam_text)->required();
    add_pretty(freud);

    CLI::App* prv = app.add_subcommand("prv", "adjoint multiplicity c(lam, mu)");
    add_type_rank(prv);
    prv->add_option("--lam", o.lam_text)->required();
    prv->add_option("--mu", o.mu_text)->required();
    add_pretty(prv);

    CLI::App* ext = app.add_subcommand("ext", "Ext^1 dimension between evaluation modules");
    add_type_rank(ext);
    ext->add_option("--space", o.space_path, "orbit space JSON file")->required();
    ext->add_option("--left", o.left_path, "module descriptor JSON file");
    ext->add_option("--right", o.right_path, "module descriptor JSON file");
    ext->add_option("--modules", o.modules_path, "JSON array of descriptors (all ordered pairs)");
    add_pretty(ext);

    CLI::App* blocks = app.add_subcommand("blocks", "block partition of a module family");
    add_type_rank(blocks);
    blocks->add_option("--space", o.space_path)->required();
    blocks->add_option("--modules", o.modules_path)->required();
    add_pretty(blocks);

    CLI::App* chain = app.add_subcommand("chain", "linkage chain between two modules");
    add_type_rank(chain);
    chain->add_option("--space", o.space_path)->required();
    chain->add_option("--left", o.left_path)->required();
    chain->add_option("--right", o.right_path)->required();
    chain->add_option("--bound", o.bound, "coordinate bound for the search window")->required();
    add_pretty(chain);

    CLI::App* margaux = app.add_subcommand("margaux", "block datum of margaux evaluation modules");
    margaux->add_option("--modules", o.modules_path)->required();
    add_pretty(margaux);

    CLI::App* extcalc = app.add_subcommand("extcalc", "closed-form extension rules");
    extcalc->require_subcommand(1);
    CLI::App* ec_abelian = extcalc->add_subcommand("abelian", "one-dimensional modules, abelian algebra");
    ec_abelian->add_option("--dimz", o.dimz_text, "dim z* (integer or 'inf')")->required();
    ec_abelian->add_option("--lam", o.label_a, "character label")->required();
    ec_abelian->add_option("--mu", o.label_b, "character label")->required();
    add_pretty(ec_abelian);
    CLI::App* ec_reductive = extcalc->add_subcommand("reductive", "simples over a reductive algebra");
    add_type_rank(ec_reductive);
    ec_reductive->add_option("--dimz", o.dimz_text, "dim z*")->required();
    ec_reductive->add_option("--central-a", o.central_a)->required();
    ec_reductive->add_option("--central-b", o.central_b)->required();
    ec_reductive->add_option("--weight-a", o.weight_a_text, "semisimple weight (omit for trivial)");
    ec_reductive->add_option("--weight-b", o.weight_b_text, "semisimple weight (omit for trivial)");
    add_pretty(ec_reductive);
    CLI::App* ec_trivial = extcalc->add_subcommand("trivial", "trivial module against a simple");
    ec_trivial->add_option("--dimz", o.dimz_text, "dim z*")->required();
    ec_trivial->add_flag("--nontrivial", o.nontrivial, "the simple module is nontrivial");
    add_pretty(ec_trivial);
    CLI::App* ec_general = extcalc->add_subcommand("general", "simples with a non-evaluation label");
    add_type_rank(ec_general);
    ec_general->add_option("--space", o.space_path)->required();
    ec_general->add_option("--label-a", o.label_a)->required();
    ec_general->add_option("--label-b", o.label_b)->required();
    ec_general->add_option("--ev-a", o.ev_a_path, "evaluation part JSON file")->required();
    ec_general->add_option("--ev-b", o.ev_b_path, "evaluation part JSON file")->required();
    add_pretty(ec_general);
    CLI::App* ec_combine = extcalc->add_subcommand("combine", "reassemble factorwise ext dimensions");
    ec_combine->add_option("--dims", o.dims_text, "comma-separated factorwise dimensions")
        ->required();
    ec_combine->add_option("--r", o.combine_r, "number of factors")->required();
    ec_combine->add_option("--quot", o.combine_quot, "dimension of the abelianization dual")
        ->required();
    add_pretty(ec_combine);

    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        } catch (const CLI::CallForHelp& e) {
            app.exit(e, out, err);
            return 0;
        } catch (const CLI::CallForAllHelp& e) {
            app.exit(e, out, err);
            return 0;
        } catch (const CLI::ParseError& e) {
            app.exit(e, out, err);
            return 2;
        }
    }

    Report report;
    report.command = args;

    auto emit = [&](json result, const std::string& pretty_text) {
        if (o.pretty && !pretty_text.empty()) {
            out << pretty_text;
            return 0;
        }
        report.inputs_digest = digest.hex();
        report.result = std::move(result);
        out << report.to_json().dump(2) << "\n";
        return 0;
    };

    try {
        if (app.got_subcommand(roots)) {
            const RootSystem rs = detail::system_of(o);
            json result;
            result["type"] = std::string(1, rs.type_letter());
            result["rank"] = rs.rank();
            result["cartan"] = rs.cartan();
            result["positive_roots"] = rs.positive_roots();
            result["positive_count"] = rs.positive_roots().size();
            result["highest_root"] = rs.highest_root();
            long long order = 1;
            for (long long d : rs.fundamental_group_shape())
                order *= d;
            result["fundamental_group"] = json{{"orders", rs.fundamental_group_shape()},
                                               {"order", order}};
            std::ostringstream pretty;
            detail::pretty_roots(rs, pretty);
            return emit(std::move(result), pretty.str());
        }

        if (app.got_subcommand(dim)) {
            const RootSystem rs = detail::system_of(o);
            const Weight lam = detail::parse_weight_arg(o.lam_text, "--lam");
            const Int d = weyl_dimension(rs, lam);
            json result{{"lam", lam.coords}, {"dim", detail::big_to_json(d)}};
            return emit(std::move(result),
                        "dim L" + to_string(lam) + " = " + d.get_str() + "\n");
        }

        if (app.got_subcommand(tensor)) {
            const RootSystem rs = detail::system_of(o);
            const Weight lam = detail::parse_weight_arg(o.lam_text, "--lam");
            const Weight mu = detail::parse_weight_arg(o.mu_text, "--mu");
            const WeightMultiset dec = tensor_decompose(rs, lam, mu);
            json cons = json::array();
            for (const auto& [w, m] : dec.entries)
                cons.push_back(json{{"weight", w.coords}, {"mult", m}});
            json result{{"lam", lam.coords},
                        {"mu", mu.coords},
                        {"constituents", std::move(cons)},
                        {"dimension",
                         detail::big_to_json(weyl_dimension(rs, lam) * weyl_dimension(rs, mu))}};
            std::ostringstream pretty;
            detail::pretty_multiset(dec, "constituents", pretty);
            return emit(std::move(result), pretty.str());
        }

        if (app.got_subcommand(freud)) {
            const RootSystem rs = detail::system_of(o);
            const Weight lam = detail::parse_weight_arg(o.lam_text, "--lam");
            const WeightMultiset ws = freudenthal_multiplicities(rs, lam);
            json weights = json::array();
            Int total = 0;
            for (const auto& [w, m] : ws.entries) {
                weights.push_back(json{{"weight", w.coords}, {"mult", m}});
                total += to_int(m);
            }
            json result{{"lam", lam.coords},
                        {"weights", std::move(weights)},
                        {"total", detail::big_to_json(total)}};
            std::ostringstream pretty;
            detail::pretty_multiset(ws, "weights", pretty);
            return emit(std::move(result), pretty.str());
        }

        if (app.got_subcommand(prv)) {
            const RootSystem rs = detail::system_of(o);
            const Weight lam = detail::parse_weight_arg(o.lam_text, "--lam");
            const Weight mu = detail::parse_weight_arg(o.mu_text, "--mu");
            const long long c = prv_adjoint_multiplicity(rs, lam, mu);
            json result{{"lam", lam.coords}, {"mu", mu.coords}, {"c", c}};
            return emit(std::move(result), "c(" + to_string(lam) + ", " + to_string(mu) +
                                               ") = " + std::to_string(c) + "\n");
        }

        if (app.got_subcommand(ext)) {
            const RootSystem rs = detail::system_of(o);
            const OrbitSpace os = io::parse_orbit_space(files.load(o.space_path), o.space_path);
            const bool pairwise = !o.modules_path.empty();
            const bool single = !o.left_path.empty() && !o.right_path.empty();
            if (pairwise == single) {
                err << "ext: provide either --left and --right, or --modules\n";
                return 2;
            }
            json result;
            std::ostringstream pretty;
            if (single) {
                const EvalModuleDescriptor e =
                    io::parse_module_descriptor(files.load(o.left_path), o.left_path);
                const EvalModuleDescriptor f =
                    io::parse_module_descriptor(files.load(o.right_path), o.right_path);
                const long long d = ext_dim(rs, os, e, f);
                result = json{{"ext_dim", d}};
                pretty << "dim Ext^1 = " << d << "\n";
            } else {
                const auto mods =
                    detail::parse_module_list(files.load(o.modules_path), o.modules_path);
                json pairs = json::array();
                pretty << "dim Ext^1, all ordered pairs:\n";
                for (std::size_t i = 0; i < mods.size(); ++i)
                    for (std::size_t j = 0; j < mods.size(); ++j) {
                        const long long d = ext_dim(rs, os, mods[i], mods[j]);
                        pairs.push_back(json{{"i", i}, {"j", j}, {"ext_dim", d}});
                        pretty << "  (" << i << ", " << j << ") -> " << d << "\n";
                    }
                result = json{{"pairs", std::move(pairs)}};
            }
            return emit(std::move(result), pretty.str());
        }

        if (app.got_subcommand(blocks)) {
            const RootSystem rs = detail::system_of(o);
            const OrbitSpace os = io::parse_orbit_space(files.load(o.space_path), o.space_path);
            const auto mods =
                detail::parse_module_list(files.load(o.modules_path), o.modules_path);
            const auto groups = blocks_report(rs, os, mods);
            json jgroups = json::array();
            std::ostringstream pretty;
            pretty << "block partition (" << groups.size() << " blocks):\n";
            for (const auto& g : groups) {
                jgroups.push_back(json{{"character", io::spectral_character_to_json(g.character)},
                                       {"members", g.members}});
                pretty << "  {";
                for (std::size_t k = 0; k < g.members.size(); ++k)
                    pretty << (k ? ", " : "") << g.members[k];
                pretty << "}\n";
            }
            return emit(json{{"groups", std::move(jgroups)}}, pretty.str());
        }

        if (app.got_subcommand(chain)) {
            const RootSystem rs = detail::system_of(o);
            const OrbitSpace os = io::parse_orbit_space(files.load(o.space_path), o.space_path);
            const EvalModuleDescriptor e =
                io::parse_module_descriptor(files.load(o.left_path), o.left_path);
            const EvalModuleDescriptor f =
                io::parse_module_descriptor(files.load(o.right_path), o.right_path);
            const auto found = linkage_chain(rs, os, e, f, o.bound);
            json result;
            std::ostringstream pretty;
            if (found) {
                json steps = json::array();
                for (const auto& d : *found)
                    steps.push_back(io::module_descriptor_to_json(d));
                result = json{{"found", true}, {"chain", std::move(steps)}};
                pretty << "linked in " << (found->size() - 1) << " steps\n";
            } else {
                result = json{{"found", false}};
                pretty << "not linked within bound " << o.bound << "\n";
            }
            return emit(std::move(result), pretty.str());
        }

        if (app.got_subcommand(margaux)) {
            const auto mods =
                io::parse_margaux_modules(files.load(o.modules_path), o.modules_path);
            const MargauxBlockDescriptor block = margaux_block(mods);
            std::ostringstream pretty;
            pretty << "margaux block datum (" << block.entries.size() << " odd entries):\n";
            for (const auto& entry : block.entries)
                pretty << "  " << to_string(entry.point) << " residue " << entry.residue << "\n";
            return emit(json{{"block", io::margaux_block_to_json(block)}}, pretty.str());
        }

        if (app.got_subcommand(extcalc)) {
            json result;
            if (extcalc->got_subcommand(ec_abelian)) {
                const ExtDimension dz = detail::parse_ext_dimension(o.dimz_text, "--dimz");
                result = json{{"ext_dim", detail::ext_dimension_to_json(
                                              ext_onedim_abelian(dz, o.label_a, o.label_b))}};
            } else if (extcalc->got_subcommand(ec_reductive)) {
                const RootSystem rs = detail::system_of(o);
                const ExtDimension dz = detail::parse_ext_dimension(o.dimz_text, "--dimz");
                if (dz.infinite)
                    throw invalid_input("--dimz: reductive rule needs a finite center");
                ReductiveSimpleDescriptor a{o.central_a, std::nullopt};
                ReductiveSimpleDescriptor b{o.central_b, std::nullopt};
                if (!o.weight_a_text.empty())
                    a.semisimple_weight = detail::parse_weight_arg(o.weight_a_text, "--weight-a");
                if (!o.weight_b_text.empty())
                    b.semisimple_weight = detail::parse_weight_arg(o.weight_b_text, "--weight-b");
                result = json{{"ext_dim", ext_reductive_simple(dz.value, rs, a, b)}};
            } else if (extcalc->got_subcommand(ec_trivial)) {
                const ExtDimension dz = detail::parse_ext_dimension(o.dimz_text, "--dimz");
                if (dz.infinite)
                    throw invalid_input("--dimz: trivial-vs-simple rule needs a finite center");
                result = json{{"ext_dim", ext_trivial_vs_simple(dz.value, o.nontrivial)}};
            } else if (extcalc->got_subcommand(ec_general)) {
                const RootSystem rs = detail::system_of(o);
                const OrbitSpace os =
                    io::parse_orbit_space(files.load(o.space_path), o.space_path);
                GeneralSimpleDescriptor a{
                    o.label_a, io::parse_module_descriptor(files.load(o.ev_a_path), o.ev_a_path)};
                GeneralSimpleDescriptor b{
                    o.label_b, io::parse_module_descriptor(files.load(o.ev_b_path), o.ev_b_path)};
                result = json{{"ext_dim", ext_general_simple(rs, os, a, b)}};
            } else {
                const auto dims = detail::parse_int_list(o.dims_text, "--dims");
                result = json{{"ext_dim",
                               combine_factorwise_ext(dims, o.combine_r, o.combine_quot)}};
            }
            const json& d = result.at("ext_dim");
            const std::string shown = d.is_string() ? d.get<std::string>() : d.dump();
            return emit(std::move(result), "dim Ext^1 = " + shown + "\n");
        }
    } catch (const invalid_input& e) {
        report.inputs_digest = digest.hex();
        report.error = json{{"message", e.what()}};
        out << report.to_json().dump(2) << "\n";
        return 1;
    }

    err << "no subcommand selected\n";
    return 2;
}

}  // namespace blockade::cli
