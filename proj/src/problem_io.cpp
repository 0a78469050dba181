#include "pcp/problem_io.hpp"

#include <cctype>
#include <cmath>

#include <json.hpp>

namespace pcp {

namespace {

using nlohmann::json;

class ExprParser {
public:
    explicit ExprParser(const std::string& src) : src_(src) {}

    ExprAST parse() {
        ExprAST e = expr();
        skip_space();
        if (pos_ != src_.size())
            throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;

    void skip_space() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    ExprAST expr() {
        ExprAST lhs = term();
        while (true) {
            std::size_t at = pos_;
            if (eat('+')) {
                ExprAST node{ExprAST::Kind::add, {}, {}, {}, at};
                node.children.push_back(std::move(lhs));
                node.children.push_back(term());
                lhs = std::move(node);
            } else if (eat('-')) {
                ExprAST node{ExprAST::Kind::sub, {}, {}, {}, at};
                node.children.push_back(std::move(lhs));
                node.children.push_back(term());
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    ExprAST term() {
        ExprAST lhs = factor();
        while (eat('*')) {
            ExprAST node{ExprAST::Kind::mul, {}, {}, {}, pos_};
            node.children.push_back(std::move(lhs));
            node.children.push_back(factor());
            lhs = std::move(node);
        }
        return lhs;
    }

    ExprAST factor() {
        skip_space();
        std::size_t at = pos_;
        if (eat('-')) {
            ExprAST node{ExprAST::Kind::neg, {}, {}, {}, at};
            node.children.push_back(factor());
            return node;
        }
        if (eat('+')) return factor();
        ExprAST base = atom();
        skip_space();
        if (eat('^')) {
            skip_space();
            std::size_t eat_ = pos_;
            if (pos_ >= src_.size() ||
                !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                throw ParseError("exponent must be a nonnegative integer", pos_);
            std::string digits;
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_])))
                digits.push_back(src_[pos_++]);
            ExprAST node{ExprAST::Kind::pow, Rational::from_string(digits), {}, {}, eat_};
            node.children.push_back(std::move(base));
            return node;
        }
        return base;
    }

    ExprAST atom() {
        skip_space();
        std::size_t at = pos_;
        if (pos_ >= src_.size()) throw ParseError("unexpected end of expression", pos_);
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            ExprAST inner = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string text;
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_])))
                text.push_back(src_[pos_++]);
            if (pos_ < src_.size() && src_[pos_] == '/') {
                std::size_t save = pos_;
                ++pos_;
                if (pos_ < src_.size() &&
                    std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    text.push_back('/');
                    while (pos_ < src_.size() &&
                           std::isdigit(static_cast<unsigned char>(src_[pos_])))
                        text.push_back(src_[pos_++]);
                } else {
                    pos_ = save;
                }
            }
            ExprAST node{ExprAST::Kind::number, {}, {}, {}, at};
            try {
                node.value = Rational::from_string(text);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), at);
            }
            return node;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '_'))
                name.push_back(src_[pos_++]);
            ExprAST node{ExprAST::Kind::variable, {}, std::move(name), {}, at};
            return node;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
};

} // namespace

ExprAST parse_expression(const std::string& source) {
    return ExprParser(source).parse();
}

MPoly lower_to_poly(const ExprAST& ast, const RingPtr& ring) {
    switch (ast.kind) {
    case ExprAST::Kind::number:
        return MPoly::constant(ring, ast.value);
    case ExprAST::Kind::variable: {
        for (int i = 0; i < ring->nvars(); ++i)
            if (ring->vars[static_cast<std::size_t>(i)] == ast.var)
                return MPoly::variable(ring, i);
        throw ParseError("unknown variable '" + ast.var + "'", ast.offset);
    }
    case ExprAST::Kind::add:
        return lower_to_poly(ast.children[0], ring) + lower_to_poly(ast.children[1], ring);
    case ExprAST::Kind::sub:
        return lower_to_poly(ast.children[0], ring) - lower_to_poly(ast.children[1], ring);
    case ExprAST::Kind::mul:
        return lower_to_poly(ast.children[0], ring) * lower_to_poly(ast.children[1], ring);
    case ExprAST::Kind::neg:
        return -lower_to_poly(ast.children[0], ring);
    case ExprAST::Kind::pow: {
        if (!mpz_fits_ulong_p(ast.value.num().get_mpz_t()))
            throw ParseError("exponent too large", ast.offset);
        return lower_to_poly(ast.children[0], ring).pow(ast.value.num().get_ui());
    }
    }
    throw StructuralError("unhandled expression node");
}

namespace {

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<std::int64_t>()));
    throw ParseError("expected an integer or rational string in " + where, 0);
}

json rational_to_json(const Rational& r) { return r.str(); }

} // namespace

ProblemFile parse_problem_file(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(),
                         static_cast<std::size_t>(e.byte));
    }
    if (!j.is_object()) throw ParseError("problem file must be a JSON object", 0);

    ProblemFile f;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("name must be a string", 0);
        f.name = j["name"].get<std::string>();
    }
    if (!j.contains("variables") || !j["variables"].is_array() || j["variables"].empty())
        throw ParseError("variables must be a non-empty array", 0);
    for (const auto& v : j["variables"]) {
        if (!v.is_string()) throw ParseError("variables must be strings", 0);
        f.variables.push_back(v.get<std::string>());
    }
    for (std::size_t i = 0; i < f.variables.size(); ++i)
        for (std::size_t k = i + 1; k < f.variables.size(); ++k)
            if (f.variables[i] == f.variables[k])
                throw ParseError("duplicate variable '" + f.variables[i] + "'", 0);
    if (!j.contains("f") || !j["f"].is_array())
        throw ParseError("f must be an array of expressions", 0);
    for (const auto& e : j["f"]) {
        if (!e.is_string()) throw ParseError("f entries must be strings", 0);
        f.f_sources.push_back(e.get<std::string>());
    }
    if (f.f_sources.size() != f.variables.size())
        throw ParseError("f must have one component per variable", 0);
    if (j.contains("expected_solutions")) {
        if (!j["expected_solutions"].is_array())
            throw ParseError("expected_solutions must be an array", 0);
        std::vector<std::vector<Rational>> rows;
        for (const auto& row : j["expected_solutions"]) {
            if (!row.is_array() || row.size() != f.variables.size())
                throw ParseError("expected_solutions rows must match the variable count", 0);
            std::vector<Rational> r;
            for (const auto& c : row) r.push_back(rational_from_json(c, "expected_solutions"));
            rows.push_back(std::move(r));
        }
        f.expected_solutions = std::move(rows);
    }
    if (j.contains("expected_deg_w")) {
        if (!j["expected_deg_w"].is_number_integer())
            throw ParseError("expected_deg_w must be an integer", 0);
        f.expected_deg_w = j["expected_deg_w"].get<int>();
    }
    return f;
}

PCPProblem to_problem(const ProblemFile& file) {
    RingPtr ring = make_ring(file.variables, OrderKind::grevlex);
    std::vector<MPoly> f;
    f.reserve(file.f_sources.size());
    for (const auto& src : file.f_sources)
        f.push_back(lower_to_poly(parse_expression(src), ring));
    return make_problem(ring, std::move(f), file.name);
}

namespace {

// Nearest grid-of-10^-digits value on the chosen side; keeps enclosures
// valid while shedding the bisection denominators.
Rational grid_round(const Rational& r, int digits, bool up) {
    const mpq_class scaled = (r * Rational::power_of_ten(digits)).raw();
    mpz_class q;
    if (up)
        mpz_cdiv_q(q.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    else
        mpz_fdiv_q(q.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    return Rational(mpq_class(q)) * Rational::power_of_ten(-digits);
}

} // namespace

std::vector<SolutionRecord> to_records(const std::vector<Solution>& sols, int deg_w) {
    const int digits = 10 + std::max(deg_w, 0);
    std::vector<SolutionRecord> out;
    out.reserve(sols.size());
    for (const auto& s : sols) {
        SolutionRecord r;
        for (const auto& xi : s.x) {
            r.decimal.push_back(xi.midpoint().decimal(digits));
            r.bounds.emplace_back(grid_round(xi.lo, digits + 2, false),
                                  grid_round(xi.hi, digits + 2, true));
        }
        r.residual = grid_round(s.residual_bound, digits + 2, true);
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

double round_ms(double seconds) { return std::round(seconds * 1000.0) / 1000.0; }

} // namespace

std::string serialize_output(const OutputDoc& doc) {
    json j;
    j["status"] = doc.status;
    j["task"] = doc.task;
    j["n"] = doc.n;
    if (doc.problem_name) j["problem"] = *doc.problem_name;
    if (doc.error) j["error"] = *doc.error;
    if (doc.witness) j["witness"] = *doc.witness;
    if (doc.is_d0) j["is_d0"] = *doc.is_d0;
    if (doc.deg_w) j["deg_w"] = *doc.deg_w;
    if (doc.w) {
        json arr = json::array();
        for (const auto& c : *doc.w) arr.push_back(rational_to_json(c));
        j["w"] = std::move(arr);
    }
    if (doc.v) {
        json vv = json::array();
        for (const auto& poly : *doc.v) {
            json arr = json::array();
            for (const auto& c : poly) arr.push_back(rational_to_json(c));
            vv.push_back(std::move(arr));
        }
        j["v"] = std::move(vv);
    }
    if (doc.phi) {
        json arr = json::array();
        for (const auto& c : *doc.phi) arr.push_back(rational_to_json(c));
        j["phi"] = std::move(arr);
    }
    if (doc.h) {
        json hh = json::array();
        for (const auto& row : *doc.h) {
            json arr = json::array();
            for (const auto& c : row) arr.push_back(rational_to_json(c));
            hh.push_back(std::move(arr));
        }
        j["h"] = std::move(hh);
    }
    if (doc.s) j["s"] = *doc.s;
    if (doc.seed) j["seed"] = *doc.seed;
    if (doc.k) j["k"] = *doc.k;
    if (doc.omega) {
        json oo = json::array();
        for (const auto& pattern : *doc.omega) {
            json arr = json::array();
            for (int i : pattern) arr.push_back(i);
            oo.push_back(std::move(arr));
        }
        j["omega"] = std::move(oo);
    }
    if (doc.sol_ln) j["sol_ln"] = *doc.sol_ln;
    if (doc.sol_sp) j["sol_sp"] = *doc.sol_sp;
    if (doc.a) {
        json arr = json::array();
        for (const auto& c : *doc.a) arr.push_back(rational_to_json(c));
        j["a"] = std::move(arr);
    }
    if (doc.solutions) {
        json ss = json::array();
        for (const auto& rec : *doc.solutions) {
            json s;
            s["x"] = rec.decimal;
            json bb = json::array();
            for (const auto& [lo, hi] : rec.bounds) {
                json pair = json::array();
                pair.push_back(rational_to_json(lo));
                pair.push_back(rational_to_json(hi));
                bb.push_back(std::move(pair));
            }
            s["bounds"] = std::move(bb);
            s["residual"] = rational_to_json(rec.residual);
            ss.push_back(std::move(s));
        }
        j["solutions"] = std::move(ss);
    }
    if (doc.timings) {
        json t;
        t["groebner"] = round_ms(doc.timings->groebner);
        t["radical"] = round_ms(doc.timings->radical);
        t["shape"] = round_ms(doc.timings->shape);
        t["enumeration"] = round_ms(doc.timings->enumeration);
        j["timings"] = std::move(t);
    }
    if (doc.total_seconds) j["total_seconds"] = round_ms(*doc.total_seconds);
    return j.dump(2) + "\n";
}

OutputDoc read_output_document(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(),
                         static_cast<std::size_t>(e.byte));
    }
    OutputDoc doc;
    doc.status = j.at("status").get<std::string>();
    doc.task = j.at("task").get<std::string>();
    doc.n = j.at("n").get<int>();
    if (j.contains("problem")) doc.problem_name = j["problem"].get<std::string>();
    if (j.contains("error")) doc.error = j["error"].get<std::string>();
    if (j.contains("witness")) doc.witness = j["witness"].get<std::string>();
    if (j.contains("is_d0")) doc.is_d0 = j["is_d0"].get<bool>();
    if (j.contains("deg_w")) doc.deg_w = j["deg_w"].get<long>();
    auto rational_list = [](const json& arr, const char* where) {
        std::vector<Rational> out;
        for (const auto& c : arr) out.push_back(rational_from_json(c, where));
        return out;
    };
    if (j.contains("w")) doc.w = rational_list(j["w"], "w");
    if (j.contains("v")) {
        std::vector<std::vector<Rational>> vv;
        for (const auto& poly : j["v"]) vv.push_back(rational_list(poly, "v"));
        doc.v = std::move(vv);
    }
    if (j.contains("phi")) doc.phi = rational_list(j["phi"], "phi");
    if (j.contains("h")) {
        std::vector<std::vector<Rational>> hh;
        for (const auto& row : j["h"]) hh.push_back(rational_list(row, "h"));
        doc.h = std::move(hh);
    }
    if (j.contains("s")) doc.s = j["s"].get<long>();
    if (j.contains("seed")) doc.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("k")) doc.k = j["k"].get<int>();
    if (j.contains("omega")) {
        std::vector<std::vector<int>> oo;
        for (const auto& pattern : j["omega"]) {
            std::vector<int> pat;
            for (const auto& i : pattern) pat.push_back(i.get<int>());
            oo.push_back(std::move(pat));
        }
        doc.omega = std::move(oo);
    }
    if (j.contains("sol_ln")) doc.sol_ln = j["sol_ln"].get<int>();
    if (j.contains("sol_sp")) doc.sol_sp = j["sol_sp"].get<int>();
    if (j.contains("a")) doc.a = rational_list(j["a"], "a");
    if (j.contains("solutions")) {
        std::vector<SolutionRecord> ss;
        for (const auto& s : j["solutions"]) {
            SolutionRecord rec;
            for (const auto& d : s.at("x")) rec.decimal.push_back(d.get<std::string>());
            for (const auto& b : s.at("bounds"))
                rec.bounds.emplace_back(rational_from_json(b.at(0), "bounds"),
                                        rational_from_json(b.at(1), "bounds"));
            rec.residual = rational_from_json(s.at("residual"), "residual");
            ss.push_back(std::move(rec));
        }
        doc.solutions = std::move(ss);
    }
    if (j.contains("timings")) {
        StageTimings t;
        const auto& tt = j["timings"];
        t.groebner = tt.value("groebner", 0.0);
        t.radical = tt.value("radical", 0.0);
        t.shape = tt.value("shape", 0.0);
        t.enumeration = tt.value("enumeration", 0.0);
        doc.timings = t;
    }
    if (j.contains("total_seconds")) doc.total_seconds = j["total_seconds"].get<double>();
    return doc;
}

RationalMatrix parse_matrix_file(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(),
                         static_cast<std::size_t>(e.byte));
    }
    if (!j.is_array() || j.empty())
        throw ParseError("matrix file must be a nonempty JSON array of rows", 0);
    const int rows = static_cast<int>(j.size());
    const int cols = j.at(0).is_array() ? static_cast<int>(j.at(0).size()) : 0;
    if (cols == 0) throw ParseError("matrix rows must be nonempty arrays", 0);
    RationalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const auto& row = j.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError("matrix rows must all have equal length", 0);
        for (int k = 0; k < cols; ++k)
            m.at(i, k) = rational_from_json(row.at(k), "matrix entry");
    }
    return m;
}

} // namespace pcp
