#include "reflecto/linrep.hpp"

#include <istream>
#include <sstream>
#include <utility>

#include "reflecto/dfao.hpp"
#include "reflecto/errors.hpp"

namespace reflecto {

namespace {

std::vector<Rational> row_times_matrix(const std::vector<Rational>& row,
                                       const std::vector<Rational>& mat,
                                       std::uint32_t dim) {
    std::vector<Rational> out(dim, Rational(0));
    for (std::uint32_t i = 0; i < dim; ++i) {
        const Rational& factor = row[i];
        if (factor == 0) continue;
        for (std::uint32_t j = 0; j < dim; ++j) {
            out[j] += factor * mat[static_cast<std::size_t>(i) * dim + j];
        }
    }
    return out;
}

// Integer image of a representation: every entry multiplied by the common
// denominator `den`, so products over l digits carry a known power of `den`.
struct ClearedRep {
    std::uint32_t base = 2;
    std::uint32_t dim = 0;
    BigInt den = 1;
    std::vector<BigInt> row;
    std::vector<std::vector<BigInt>> mats;
    std::vector<BigInt> col;
};

ClearedRep clear_denominators(const LinearRepresentation& rep) {
    ClearedRep out;
    out.base = rep.base;
    out.dim = rep.dim;
    auto widen = [&out](const Rational& q) {
        out.den = boost::multiprecision::lcm(out.den, BigInt(boost::multiprecision::denominator(q)));
    };
    for (const Rational& q : rep.row) widen(q);
    for (const auto& mat : rep.mats)
        for (const Rational& q : mat) widen(q);
    for (const Rational& q : rep.col) widen(q);

    auto scale = [&out](const Rational& q) {
        return BigInt(boost::multiprecision::numerator(q) *
                      (out.den / boost::multiprecision::denominator(q)));
    };
    out.row.reserve(rep.row.size());
    for (const Rational& q : rep.row) out.row.push_back(scale(q));
    out.col.reserve(rep.col.size());
    for (const Rational& q : rep.col) out.col.push_back(scale(q));
    out.mats.resize(rep.mats.size());
    for (std::size_t d = 0; d < rep.mats.size(); ++d) {
        out.mats[d].reserve(rep.mats[d].size());
        for (const Rational& q : rep.mats[d]) out.mats[d].push_back(scale(q));
    }
    return out;
}

BigInt dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    BigInt sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

std::vector<BigInt> advance(const ClearedRep& rep, const std::vector<BigInt>& cur,
                            std::uint32_t digit) {
    const auto& mat = rep.mats[digit];
    std::vector<BigInt> out(rep.dim, BigInt(0));
    for (std::uint32_t i = 0; i < rep.dim; ++i) {
        if (cur[i] == 0) continue;
        for (std::uint32_t j = 0; j < rep.dim; ++j) {
            out[j] += cur[i] * mat[static_cast<std::size_t>(i) * rep.dim + j];
        }
    }
    return out;
}

bool agree_below(const ClearedRep& a, const ClearedRep& b,
                 const std::vector<BigInt>& cur_a, const std::vector<BigInt>& cur_b,
                 const std::vector<BigInt>& pow_a, const std::vector<BigInt>& pow_b,
                 std::size_t depth, std::size_t bound) {
    // cur_a is scaled by den_a^(depth+1); the dot with col adds one more.
    if (dot(cur_a, a.col) * pow_b[depth + 2] != dot(cur_b, b.col) * pow_a[depth + 2]) {
        return false;
    }
    if (depth + 1 >= bound) return true;
    for (std::uint32_t d = 0; d < a.base; ++d) {
        if (!agree_below(a, b, advance(a, cur_a, d), advance(b, cur_b, d),
                         pow_a, pow_b, depth + 1, bound)) {
            return false;
        }
    }
    return true;
}

Rational parse_rational_token(const std::string& token, std::size_t line) {
    const auto slash = token.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(token));
        }
        BigInt num(token.substr(0, slash));
        BigInt den(token.substr(slash + 1));
        if (den == 0) {
            throw ParseError(line, 0, "zero denominator in '" + token + "'");
        }
        return Rational(num, den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError(line, 0, "bad rational '" + token + "'");
    }
}

// Lines of the input with comments and blanks removed, keeping line numbers.
struct NumberedLine {
    std::size_t number;
    std::string text;
};

std::vector<NumberedLine> content_lines(std::istream& in) {
    std::vector<NumberedLine> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        const auto start = raw.find_first_not_of(" \t\r");
        if (start == std::string::npos || raw[start] == '#') continue;
        lines.push_back({number, raw});
    }
    return lines;
}

std::vector<Rational> parse_entries(const NumberedLine& line, std::istringstream& stream,
                                    std::uint32_t count) {
    std::vector<Rational> entries;
    entries.reserve(count);
    std::string token;
    while (entries.size() < count && stream >> token) {
        entries.push_back(parse_rational_token(token, line.number));
    }
    if (entries.size() < count) {
        throw ParseError(line.number, 0, "expected " + std::to_string(count) + " entries");
    }
    if (stream >> token) {
        throw ParseError(line.number, 0, "trailing data '" + token + "'");
    }
    return entries;
}

}  // namespace

void LinearRepresentation::validate() const {
    if (base < 2) throw SpecError("representation base must be at least 2");
    if (dim == 0) throw SpecError("representation dimension must be positive");
    if (row.size() != dim || col.size() != dim) {
        throw SpecError("boundary vectors must have length equal to the dimension");
    }
    if (mats.size() != base) {
        throw SpecError("need exactly one matrix per digit");
    }
    for (const auto& mat : mats) {
        if (mat.size() != static_cast<std::size_t>(dim) * dim) {
            throw SpecError("matrices must be square of size dimension");
        }
    }
}

Rational linrep_eval_digits(const LinearRepresentation& rep,
                            std::span<const std::uint32_t> digits) {
    rep.validate();
    std::vector<Rational> cur = rep.row;
    for (std::uint32_t d : digits) {
        if (d >= rep.base) throw SpecError("digit out of range for representation base");
        cur = row_times_matrix(cur, rep.mats[d], rep.dim);
    }
    Rational value = 0;
    for (std::uint32_t j = 0; j < rep.dim; ++j) value += cur[j] * rep.col[j];
    return value;
}

Rational linrep_eval(const LinearRepresentation& rep, std::uint64_t n) {
    const std::vector<std::uint32_t> digits = base_digits(n, rep.base);
    return linrep_eval_digits(rep, digits);
}

bool linrep_equal(const LinearRepresentation& a, const LinearRepresentation& b) {
    a.validate();
    b.validate();
    if (a.base != b.base) {
        throw SpecError("cannot compare representations over different bases");
    }
    const ClearedRep ca = clear_denominators(a);
    const ClearedRep cb = clear_denominators(b);
    const std::size_t bound = static_cast<std::size_t>(a.dim) + b.dim;
    std::vector<BigInt> pow_a(bound + 3), pow_b(bound + 3);
    pow_a[0] = 1;
    pow_b[0] = 1;
    for (std::size_t i = 1; i < pow_a.size(); ++i) {
        pow_a[i] = pow_a[i - 1] * ca.den;
        pow_b[i] = pow_b[i - 1] * cb.den;
    }
    return agree_below(ca, cb, ca.row, cb.row, pow_a, pow_b, 0, bound);
}

LinearRepresentation parse_linrep(std::istream& in) {
    const std::vector<NumberedLine> lines = content_lines(in);
    std::size_t at = 0;
    auto next = [&lines, &at](const char* what) -> const NumberedLine& {
        if (at >= lines.size()) {
            const std::size_t last = lines.empty() ? 1 : lines.back().number;
            throw ParseError(last, 0, std::string("unexpected end of input, expected ") + what);
        }
        return lines[at++];
    };

    LinearRepresentation rep;
    {
        const NumberedLine& line = next("header");
        std::istringstream stream(line.text);
        std::string kw_base, kw_dim;
        if (!(stream >> kw_base >> rep.base >> kw_dim >> rep.dim) || kw_base != "base" ||
            kw_dim != "dim") {
            throw ParseError(line.number, 0, "expected 'base <k> dim <d>'");
        }
        if (rep.base < 2 || rep.base > 36) {
            throw ParseError(line.number, 0, "base must be between 2 and 36");
        }
        if (rep.dim == 0) {
            throw ParseError(line.number, 0, "dimension must be positive");
        }
    }
    {
        const NumberedLine& line = next("row vector");
        std::istringstream stream(line.text);
        std::string kw;
        stream >> kw;
        if (kw != "v") throw ParseError(line.number, 0, "expected 'v' line");
        rep.row = parse_entries(line, stream, rep.dim);
    }
    rep.mats.resize(rep.base);
    for (std::uint32_t d = 0; d < rep.base; ++d) {
        const NumberedLine& line = next("matrix header");
        std::istringstream stream(line.text);
        std::string kw;
        std::uint32_t digit = 0;
        if (!(stream >> kw >> digit) || kw != "mu" || digit != d) {
            throw ParseError(line.number, 0, "expected 'mu " + std::to_string(d) + "'");
        }
        rep.mats[d].reserve(static_cast<std::size_t>(rep.dim) * rep.dim);
        for (std::uint32_t r = 0; r < rep.dim; ++r) {
            const NumberedLine& row_line = next("matrix row");
            std::istringstream row_stream(row_line.text);
            for (const Rational& q : parse_entries(row_line, row_stream, rep.dim)) {
                rep.mats[d].push_back(q);
            }
        }
    }
    {
        const NumberedLine& line = next("column vector");
        std::istringstream stream(line.text);
        std::string kw;
        stream >> kw;
        if (kw != "w") throw ParseError(line.number, 0, "expected 'w' line");
        rep.col = parse_entries(line, stream, rep.dim);
    }
    if (at != lines.size()) {
        throw ParseError(lines[at].number, 0, "trailing content after representation");
    }
    rep.validate();
    return rep;
}

std::string serialize_linrep(const LinearRepresentation& rep) {
    rep.validate();
    std::ostringstream out;
    out << "base " << rep.base << " dim " << rep.dim << "\n";
    out << "v";
    for (const Rational& q : rep.row) out << " " << q.str();
    out << "\n";
    for (std::uint32_t d = 0; d < rep.base; ++d) {
        out << "mu " << d << "\n";
        for (std::uint32_t r = 0; r < rep.dim; ++r) {
            for (std::uint32_t c = 0; c < rep.dim; ++c) {
                if (c > 0) out << " ";
                out << rep.mats[d][static_cast<std::size_t>(r) * rep.dim + c].str();
            }
            out << "\n";
        }
    }
    out << "w";
    for (const Rational& q : rep.col) out << " " << q.str();
    out << "\n";
    return out.str();
}

namespace {

LinearRepresentation from_integer_data(std::uint32_t base, std::uint32_t dim,
                                       const std::vector<long>& row,
                                       const std::vector<std::vector<long>>& mats,
                                       long denominator, const std::vector<long>& col) {
    LinearRepresentation rep;
    rep.base = base;
    rep.dim = dim;
    for (long x : row) rep.row.emplace_back(x);
    for (long x : col) rep.col.emplace_back(x);
    rep.mats.resize(mats.size());
    for (std::size_t d = 0; d < mats.size(); ++d) {
        for (long x : mats[d]) rep.mats[d].emplace_back(BigInt(x), BigInt(denominator));
    }
    rep.validate();
    return rep;
}

}  // namespace

LinearRepresentation thue_morse_r_rep() {
    // Minimized from the reversal-closure definition of r; entries are
    // integers over a common denominator of 33.
    const std::vector<std::vector<long>> mats = {
        {
            33, 0,   0,  0,  0,  0,   0,   0,  0,   //
            0,  0,   33, 0,  0,  0,   0,   0,  0,   //
            0,  0,   0,  0,  33, 0,   0,   0,  0,   //
            0,  0,   0,  0,  0,  0,   33,  0,  0,   //
            0,  0,   0,  0,  0,  0,   0,   0,  33,  //
            0,  0,   -26, 0,  0,  23,  10,  -10, 36,  //
            0,  0,   -57, 33, 0,  6,   -6,  6,  51,  //
            0,  0,   -79, 33, 33, -5,  -28, 28, 51,  //
            0,  0,   -72, 0,  33, 18,  -18, 18, 54,  //
        },
        {
            0, 33, 0,   0,  0,  0,  0,   0,  0,   //
            0, 0,  0,   33, 0,  0,  0,   0,  0,   //
            0, 0,  0,   0,  0,  33, 0,   0,  0,   //
            0, 0,  0,   0,  0,  0,  0,   33, 0,   //
            0, 0,  -24, 0,  0,  39, -6,  6,  18,  //
            0, 0,  -40, 0,  0,  43, -10, 10, 30,  //
            0, 0,  -78, 33, 33, 3,  -36, 36, 42,  //
            0, 0,  -86, 33, 33, 5,  -38, 38, 48,  //
            0, 0,  -72, 0,  0,  51, -18, 18, 54,  //
        },
    };
    return from_integer_data(2, 9, {1, 0, 0, 0, 0, 0, 0, 0, 0}, mats, 33,
                             {1, 2, 3, 4, 6, 6, 10, 10, 13});
}

LinearRepresentation thue_morse_rho_shift_rep() {
    // Hand-built from the kernel of n -> rho(n+1) under the doubling
    // recurrences; the four coordinates track rho(n+1), rho(n+2) and the
    // corrections needed at n = 0 and n = 1.
    const std::vector<std::vector<long>> mats = {
        {
            2, 1, 0, 0,   //
            0, 1, 0, 0,   //
            -2, -2, 1, 0,  //
            -2, 0, 0, 0,  //
        },
        {
            1, 0, 0, 0,   //
            1, 2, 0, 0,   //
            -2, -2, 0, 1,  //
            0, 0, 0, 0,   //
        },
    };
    return from_integer_data(2, 4, {2, 4, 1, 0}, mats, 1, {1, 0, 0, 0});
}

}  // namespace reflecto
