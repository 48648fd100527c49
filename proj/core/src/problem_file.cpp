#include "ritz/problem_file.hpp"

#include "ritz/errors.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace ritz {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_values(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == ',')) ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != ',') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

class LineContext {
public:
    LineContext(std::size_t line, std::size_t offset, std::string_view key)
        : line_(line), offset_(offset), key_(key) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("problem file line " + std::to_string(line_) + " (" + std::string(key_) + "): " + msg,
                         offset_);
    }

    double to_real(std::string_view s) const {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) fail("invalid number '" + std::string(s) + "'");
        return v;
    }

    std::size_t to_count(std::string_view s) const {
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) fail("invalid count '" + std::string(s) + "'");
        return v;
    }

    std::string expression(std::string_view s) const {
        try {
            (void)expr::parse(s);
        } catch (const ParseError& e) {
            fail(e.what());
        }
        return std::string(s);
    }

private:
    std::size_t line_;
    std::size_t offset_;
    std::string_view key_;
};

}  // namespace

ProblemSpec parse_problem_spec(std::string_view text) {
    ProblemSpec spec;
    std::set<std::string, std::less<>> seen;
    std::size_t offset = 0;
    std::size_t line_no = 0;
    while (offset <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', offset), text.size());
        std::string_view line = text.substr(offset, eol - offset);
        const std::size_t line_offset = offset;
        offset = eol + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("problem file line " + std::to_string(line_no) + ": expected 'key = value'", line_offset);
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        const LineContext ctx(line_no, line_offset, key);
        if (!seen.insert(std::string(key)).second) ctx.fail("key given more than once");
        if (value.empty()) ctx.fail("missing value");

        if (key == "domain") {
            const auto parts = split_values(value);
            if (parts.size() != 4) ctx.fail("expected four numbers x0 y0 x1 y1");
            spec.domain = {ctx.to_real(parts[0]), ctx.to_real(parts[1]), ctx.to_real(parts[2]), ctx.to_real(parts[3])};
            if (!(spec.domain.x1 > spec.domain.x0 && spec.domain.y1 > spec.domain.y0)) {
                ctx.fail("degenerate rectangle: require x1 > x0 and y1 > y0");
            }
        } else if (key == "grid") {
            const auto parts = split_values(value);
            if (parts.size() != 2) ctx.fail("expected two cell counts nx ny");
            spec.nx = ctx.to_count(parts[0]);
            spec.ny = ctx.to_count(parts[1]);
        } else if (key == "f") {
            spec.f = ctx.expression(value);
        } else if (key == "g") {
            spec.g = ctx.expression(value);
        } else if (key == "u_exact") {
            spec.u_exact = ctx.expression(value);
        } else if (key == "mode") {
            if (value == "extension") spec.mode = BoundaryMode::extension;
            else if (value == "border") spec.mode = BoundaryMode::border;
            else ctx.fail("mode must be 'extension' or 'border'");
        } else if (key == "tol") {
            spec.solver.rel_tolerance = ctx.to_real(value);
            if (!(spec.solver.rel_tolerance > 0.0 && spec.solver.rel_tolerance < 1.0)) ctx.fail("tol must lie in (0, 1)");
        } else if (key == "max_iter") {
            spec.solver.max_iterations = ctx.to_count(value);
            if (*spec.solver.max_iterations < 1) ctx.fail("max_iter must be >= 1");
        } else if (key == "seed") {
            std::uint64_t seed = 0;
            const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), seed);
            if (ec != std::errc() || ptr != value.data() + value.size()) ctx.fail("invalid seed");
            spec.seed = seed;
        } else {
            ctx.fail("unknown key");
        }
    }

    if (spec.nx < 2 || spec.ny < 2) {
        throw std::invalid_argument("no interior degrees of freedom: grid must be at least 2x2, got " +
                                    std::to_string(spec.nx) + "x" + std::to_string(spec.ny));
    }
    return spec;
}

ProblemSpec load_problem_spec(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open problem file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read problem file '" + path.string() + "'");
    return parse_problem_spec(buf.str());
}

std::string to_string(BoundaryMode mode) { return mode == BoundaryMode::border ? "border" : "extension"; }

}  // namespace ritz
