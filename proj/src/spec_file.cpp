#include "lgcy/spec_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "lgcy/errors.hpp"

namespace lgcy {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// splits "a, b, c" at top level (no nesting inside tokens except quotes/brackets)
std::vector<std::string> split_list(const std::string& body, std::size_t line_no) {
    std::vector<std::string> out;
    int depth = 0;
    bool quoted = false;
    std::string cur;
    for (char c : body) {
        if (quoted) {
            cur += c;
            if (c == '"') quoted = false;
            continue;
        }
        if (c == '"') {
            cur += c;
            quoted = true;
        } else if (c == '[') {
            ++depth;
            cur += c;
        } else if (c == ']') {
            --depth;
            cur += c;
        } else if (c == ',' && depth == 0) {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted || depth != 0) throw ParseError("unbalanced list", line_no);
    std::string last = strip(cur);
    if (!last.empty()) out.push_back(last);
    return out;
}

std::string expect_bracketed(const std::string& v, std::size_t line_no) {
    if (v.size() < 2 || v.front() != '[' || v.back() != ']')
        throw ParseError("expected a [...] list", line_no);
    return v.substr(1, v.size() - 2);
}

std::string expect_quoted(const std::string& v, std::size_t line_no) {
    if (v.size() < 2 || v.front() != '"' || v.back() != '"')
        throw ParseError("expected a quoted string", line_no);
    return v.substr(1, v.size() - 2);
}

Rational parse_rational(const std::string& v, std::size_t line_no) {
    try {
        return Rational::from_string(v);
    } catch (const std::exception&) {
        throw ParseError("malformed rational '" + v + "'", line_no);
    }
}

}  // namespace

SingularitySpec parse_singularity_spec(const std::string& text) {
    SingularitySpec spec;
    bool saw_f = false, saw_vars = false, saw_degree = false;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string line = strip(raw);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no);
        std::string key = strip(line.substr(0, eq));
        std::string value = strip(line.substr(eq + 1));
        if (key == "variables") {
            for (const auto& tok : split_list(expect_bracketed(value, line_no), line_no)) {
                if (tok.empty()) throw ParseError("empty variable name", line_no);
                spec.variables.push_back(tok);
            }
            saw_vars = true;
        } else if (key == "degree") {
            try {
                spec.degree = std::stoll(value);
            } catch (const std::exception&) {
                throw ParseError("malformed degree", line_no);
            }
            if (spec.degree < 1) throw ParseError("degree must be positive", line_no);
            saw_degree = true;
        } else if (key == "f") {
            spec.f_text = expect_quoted(value, line_no);
            saw_f = true;
        } else if (key == "weights") {
            std::vector<Rational> w;
            for (const auto& tok : split_list(expect_bracketed(value, line_no), line_no))
                w.push_back(parse_rational(tok, line_no));
            spec.weights = std::move(w);
        } else if (key == "deformations") {
            for (const auto& tok : split_list(expect_bracketed(value, line_no), line_no))
                spec.deformations.push_back(expect_quoted(tok, line_no));
        } else if (key == "points") {
            for (const auto& tok : split_list(expect_bracketed(value, line_no), line_no)) {
                std::vector<Rational> pt;
                for (const auto& c : split_list(expect_bracketed(tok, line_no), line_no))
                    pt.push_back(parse_rational(c, line_no));
                spec.points.push_back(std::move(pt));
            }
        } else {
            throw ParseError("unknown key '" + key + "'", line_no);
        }
    }
    if (!saw_vars) throw ParseError("missing 'variables'", line_no);
    if (!saw_degree) throw ParseError("missing 'degree'", line_no);
    if (!saw_f) throw ParseError("missing 'f'", line_no);
    if (spec.weights && spec.weights->size() != spec.variables.size())
        throw ParseError("weights length != variable count", line_no);
    return spec;
}

SingularitySpec load_singularity_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open spec file '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_singularity_spec(buf.str());
}

}  // namespace lgcy
