#include "reflecto/dfao.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>

#include "reflecto/errors.hpp"

namespace reflecto {

void Dfao::validate() const {
    if (base < 2) throw SpecError("dfao base must be at least 2");
    if (outputs.empty()) throw SpecError("dfao needs at least one state");
    if (transitions.size() != outputs.size())
        throw SpecError("dfao has " + std::to_string(outputs.size()) +
                        " outputs but " + std::to_string(transitions.size()) +
                        " transition rows");
    if (initial >= outputs.size())
        throw SpecError("dfao initial state out of range");
    for (std::size_t q = 0; q < transitions.size(); ++q) {
        if (transitions[q].size() != base)
            throw SpecError("dfao state " + std::to_string(q) +
                            " is missing transitions (table must be total)");
        for (std::uint32_t target : transitions[q])
            if (target >= outputs.size())
                throw SpecError("dfao state " + std::to_string(q) +
                                " has a transition to missing state " +
                                std::to_string(target));
    }
}

std::vector<std::uint32_t> base_digits(std::uint64_t n, std::uint32_t base) {
    if (base < 2) throw SpecError("base must be at least 2");
    std::vector<std::uint32_t> digits;
    while (n > 0) {
        digits.push_back(static_cast<std::uint32_t>(n % base));
        n /= base;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::uint32_t dfao_read(const Dfao& machine,
                        const std::vector<std::uint32_t>& digits) {
    std::uint32_t state = machine.initial;
    for (std::uint32_t d : digits) {
        if (d >= machine.base)
            throw SpecError("digit " + std::to_string(d) +
                            " out of range for base " +
                            std::to_string(machine.base));
        state = machine.transitions[state][d];
    }
    return machine.outputs[state];
}

std::uint32_t dfao_term(const Dfao& machine, std::uint64_t n) {
    return dfao_read(machine, base_digits(n, machine.base));
}

namespace {

// Pulls the next whitespace-separated token from a single line.
struct LineTokens {
    std::istringstream in;
    std::size_t line;

    LineTokens(const std::string& text, std::size_t line)
        : in(text), line(line) {}

    std::string next(const char* what) {
        std::string token;
        if (!(in >> token))
            throw ParseError(line, 0, std::string("expected ") + what);
        return token;
    }

    bool done() {
        std::string token;
        return !(in >> token);
    }
};

std::uint64_t parse_number(const std::string& token, std::size_t line,
                           const char* what) {
    try {
        std::size_t used = 0;
        unsigned long long value = std::stoull(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line, 0,
                         std::string("expected ") + what + ", got '" + token +
                             "'");
    }
}

}  // namespace

Dfao parse_dfao(std::istream& in) {
    std::string text;
    std::size_t line_no = 0;

    // Header: base K states M initial Q
    std::string header;
    while (std::getline(in, header)) {
        ++line_no;
        if (header.find_first_not_of(" \t\r") != std::string::npos) break;
    }
    if (line_no == 0) throw ParseError(1, 0, "empty dfao file");
    LineTokens head(header, line_no);
    if (head.next("'base'") != "base")
        throw ParseError(line_no, 0, "header must start with 'base'");
    Dfao machine;
    machine.base =
        static_cast<std::uint32_t>(parse_number(head.next("base"), line_no, "base"));
    if (head.next("'states'") != "states")
        throw ParseError(line_no, 0, "expected 'states' in header");
    std::uint64_t states = parse_number(head.next("state count"), line_no,
                                        "state count");
    if (head.next("'initial'") != "initial")
        throw ParseError(line_no, 0, "expected 'initial' in header");
    machine.initial = static_cast<std::uint32_t>(
        parse_number(head.next("initial state"), line_no, "initial state"));
    if (!head.done()) throw ParseError(line_no, 0, "trailing tokens in header");

    machine.outputs.assign(states, 0);
    machine.transitions.assign(states, {});
    std::vector<bool> seen(states, false);

    while (std::getline(in, text)) {
        ++line_no;
        if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
        LineTokens row(text, line_no);
        std::uint64_t q = parse_number(row.next("state id"), line_no, "state id");
        if (q >= states)
            throw ParseError(line_no, 0,
                             "state id " + std::to_string(q) + " out of range");
        if (seen[q])
            throw ParseError(line_no, 0,
                             "state " + std::to_string(q) + " defined twice");
        seen[q] = true;
        machine.outputs[q] = static_cast<std::uint32_t>(
            parse_number(row.next("output"), line_no, "output"));
        machine.transitions[q].assign(machine.base, 0);
        std::vector<bool> have(machine.base, false);
        for (std::uint32_t i = 0; i < machine.base; ++i) {
            std::string token = row.next("digit:target");
            std::size_t colon = token.find(':');
            if (colon == std::string::npos)
                throw ParseError(line_no, 0,
                                 "expected digit:target, got '" + token + "'");
            std::uint64_t digit = parse_number(token.substr(0, colon), line_no,
                                               "digit");
            std::uint64_t target = parse_number(token.substr(colon + 1),
                                                line_no, "target state");
            if (digit >= machine.base)
                throw ParseError(line_no, 0,
                                 "digit " + std::to_string(digit) +
                                     " out of range for base " +
                                     std::to_string(machine.base));
            if (have[digit])
                throw ParseError(line_no, 0, "digit " + std::to_string(digit) +
                                                 " listed twice");
            have[digit] = true;
            machine.transitions[q][static_cast<std::size_t>(digit)] =
                static_cast<std::uint32_t>(target);
        }
        if (!row.done())
            throw ParseError(line_no, 0, "trailing tokens after transitions");
    }
    for (std::size_t q = 0; q < states; ++q)
        if (!seen[q])
            throw ParseError(line_no, 0,
                             "state " + std::to_string(q) + " never defined");
    try {
        machine.validate();
    } catch (const SpecError& e) {
        throw ParseError(line_no, 0, e.what());
    }
    return machine;
}

std::string serialize_dfao(const Dfao& machine) {
    machine.validate();
    std::ostringstream out;
    out << "base " << machine.base << " states " << machine.states()
        << " initial " << machine.initial << "\n";
    for (std::uint32_t q = 0; q < machine.states(); ++q) {
        out << q << " " << machine.outputs[q];
        for (std::uint32_t d = 0; d < machine.base; ++d)
            out << " " << d << ":" << machine.transitions[q][d];
        out << "\n";
    }
    return out.str();
}

}  // namespace reflecto
