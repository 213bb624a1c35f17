#include "eulerperm/insertion.hpp"
#include "eulerperm/omega.hpp"
#include "eulerperm/qpoly.hpp"
#include "eulerperm/shuffle.hpp"
#include "eulerperm/tree.hpp"
#include "eulerperm/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace eulerperm;

// Hard resource cap; EULERPERM_MAX_N raises or lowers it.
int env_cap() {
    const char* v = std::getenv("EULERPERM_MAX_N");
    if (v == nullptr || *v == '\0') return kDefaultEnumCap;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        throw ParseError("EULERPERM_MAX_N is not an integer");
    }
}

std::string set_str(const std::vector<int>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + "}";
}

std::vector<Permutation> members_with_shape(PermClass cls, int n, int cap,
                                            const std::string& shape_text) {
    auto members = enumerate_class(cls, n, cap);
    if (shape_text.empty()) return members;
    const TreeShape want = TreeShape::parse(shape_text);
    std::vector<Permutation> out;
    for (auto& p : members)
        if (shape(psi(p)) == want) out.push_back(std::move(p));
    return out;
}

int cmd_enumerate(const std::string& cls_name, int n, const std::string& format,
                  const std::string& shape_text) {
    const auto members =
        members_with_shape(parse_class(cls_name), n, env_cap(), shape_text);
    if (format == "words") {
        for (const auto& p : members) std::cout << p.str() << "\n";
    } else if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : members) arr.push_back(p.str());
        std::cout << arr.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "word\n";
        for (const auto& p : members) std::cout << p.str() << "\n";
    } else {
        throw ParseError("unknown format: " + format);
    }
    return 0;
}

int cmd_stats(const std::string& text) {
    const Permutation p = Permutation::parse(text);
    if (!p.is_standard()) {
        std::cout << "des=" << des(p) << " maj=" << maj(p)
                  << " Des=" << set_str(descent_set(p))
                  << " (not standard; inverse statistics undefined)\n";
        return 0;
    }
    const StatVector st = statistics(p);
    std::cout << "des=" << st.des << " maj=" << st.maj << " ides=" << st.ides
              << " imaj=" << st.imaj << " inv=" << st.inv << " rlmin=" << st.rlmin
              << " Des=" << set_str(descent_set(p))
              << " IDes=" << set_str(idescent_set(p)) << "\n";
    return 0;
}

int cmd_poly(const std::string& cls_name, int n, const std::string& vars,
             const std::string& format, const std::string& shape_text) {
    MultiPoly poly;
    if (shape_text.empty()) {
        poly = class_polynomial(parse_class(cls_name), n, vars, env_cap());
    } else {
        bool use_s = false, use_t = false, use_q = false;
        for (char c : vars) {
            if (c == 's') use_s = true;
            else if (c == 't') use_t = true;
            else if (c == 'q') use_q = true;
            else throw ParseError("unknown variable: " + std::string(1, c));
        }
        if (vars.empty()) throw ParseError("empty variable list");
        for (const auto& p :
             members_with_shape(parse_class(cls_name), n, env_cap(), shape_text)) {
            const StatVector st = statistics(p);
            poly += MultiPoly::monomial(1, use_s ? st.ides : 0, use_t ? st.des : 0,
                                        use_q ? static_cast<int>(st.maj) : 0);
        }
    }
    if (format == "text") {
        std::cout << poly.str() << "\n";
    } else if (format == "json") {
        nlohmann::json j;
        j["class"] = cls_name;
        j["n"] = n;
        j["vars"] = vars;
        j["text"] = poly.str();
        j["terms"] = nlohmann::json::parse(poly.json_terms());
        std::cout << j.dump() << "\n";
    } else {
        throw ParseError("unknown format: " + format);
    }
    return 0;
}

int cmd_bijection(const std::string& map, const std::string& input,
                  const std::string& delta_text, const std::string& pi_text,
                  int j) {
    if (map == "psi") {
        std::cout << psi(Permutation::parse(input)).serialize() << "\n";
    } else if (map == "psi-inv") {
        std::cout << psi_inv(IncreasingBinaryTree::parse(input)).str() << "\n";
    } else if (map == "omega") {
        std::cout << omega(Permutation::parse(input)).str() << "\n";
    } else if (map == "omega-inv") {
        std::cout << omega_inv(Permutation::parse(input)).str() << "\n";
    } else if (map == "phi") {
        if (delta_text.empty() || pi_text.empty())
            throw ParseError("phi needs --delta and --pi");
        const PartitionPair pp =
            phi(Permutation::parse(input), Permutation::parse(delta_text),
                Permutation::parse(pi_text));
        std::cout << "lambda=" << pp.lambda.str() << " mu=" << pp.mu.str() << "\n";
    } else if (map == "to-shuffle") {
        if (j < 0) throw ParseError("to-shuffle needs --j");
        std::cout << to_shuffle(Permutation::parse(input), j).str() << "\n";
    } else {
        throw ParseError("unknown map: " + map);
    }
    return 0;
}

int cmd_verify(const std::string& theorem, int max_n, const std::string& format) {
    if (max_n > env_cap())
        throw ResourceLimitError("--max-n exceeds the resource cap; raise EULERPERM_MAX_N");
    if (max_n > 8)
        std::cerr << "warning: caps above 8 grow factorially; expect a long run\n";
    const verify::CheckReport rep = verify::run_check(theorem, max_n);
    if (format == "text") {
        std::cout << verify::render_text(rep);
    } else if (format == "json") {
        std::cout << verify::render_json(rep);
    } else if (format == "csv") {
        std::cout << verify::render_csv(rep);
    } else {
        throw ParseError("unknown format: " + format);
    }
    return rep.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration and verification for three Euler-number "
                 "permutation classes"};
    app.require_subcommand(1);

    std::string enum_class = "all", enum_format = "words", enum_shape;
    std::string poly_class, poly_vars = "stq", poly_format = "text", poly_shape;
    std::string word, map_name, delta_text, pi_text;
    std::string theorem, verify_format = "text";
    int enum_n = 0, poly_n = 0, max_n = 0, j = -1;

    auto* c_enum = app.add_subcommand("enumerate", "list the members of a class");
    c_enum->add_option("--class", enum_class, "andre1|andre2|simsun|all");
    c_enum->add_option("--n", enum_n, "word length")->required();
    c_enum->add_option("--format", enum_format, "words|json|csv");
    c_enum->add_option("--shape", enum_shape, "restrict to one serialized tree shape");

    auto* c_stats = app.add_subcommand("stats", "statistics of one word");
    c_stats->add_option("word", word, "permutation word")->required();

    auto* c_poly = app.add_subcommand("poly", "class generating polynomial");
    c_poly->add_option("--class", poly_class, "andre1|andre2|simsun|all")->required();
    c_poly->add_option("--n", poly_n, "word length")->required();
    c_poly->add_option("--vars", poly_vars, "subset of stq");
    c_poly->add_option("--format", poly_format, "text|json");
    c_poly->add_option("--shape", poly_shape, "restrict to one serialized tree shape");

    auto* c_bij = app.add_subcommand("bijection", "apply one of the bijections");
    c_bij->add_option("--map", map_name, "psi|psi-inv|omega|omega-inv|phi|to-shuffle")
        ->required()
        ->check(CLI::IsMember({"psi", "psi-inv", "omega", "omega-inv", "phi",
                               "to-shuffle"}));
    c_bij->add_option("input", word, "word or serialized tree")->required();
    c_bij->add_option("--delta", delta_text, "delta word (phi)");
    c_bij->add_option("--pi", pi_text, "pi word (phi)");
    c_bij->add_option("--j", j, "left factor length (to-shuffle)");

    auto* c_verify = app.add_subcommand("verify", "check one statement exhaustively");
    c_verify
        ->add_option("--theorem", theorem,
                     "counts|main|shape|prop23|thm12|stanley|refined|phi|omega|"
                     "prop43|prop44")
        ->required()
        ->check(CLI::IsMember({"counts", "main", "shape", "prop23", "thm12",
                               "stanley", "refined", "phi", "omega", "prop43",
                               "prop44"}));
    c_verify->add_option("--max-n", max_n, "cap override; 0 keeps the default");
    c_verify->add_option("--format", verify_format, "text|json|csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_enum->parsed()) return cmd_enumerate(enum_class, enum_n, enum_format, enum_shape);
        if (c_stats->parsed()) return cmd_stats(word);
        if (c_poly->parsed()) return cmd_poly(poly_class, poly_n, poly_vars, poly_format, poly_shape);
        if (c_bij->parsed()) return cmd_bijection(map_name, word, delta_text, pi_text, j);
        if (c_verify->parsed()) return cmd_verify(theorem, max_n, verify_format);
    } catch (const eulerperm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
