// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include "umbral/errors.hpp"
#include "umbral/identities.hpp"
#include "umbral/render.hpp"
#include "umbral/sequences.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <ostream>
#include <variant>
#include <vector>

namespace dobell {

namespace {

using json = nlohmann::ordered_json;
using namespace umbral;

constexpr const char* kUsageText =
    "usage: dobell (table|poly|expand|verify) [args] [--nmax N] [--lambda p/q]\n"
    "              [--format plain|json|csv|latex] [--ascii] [--r R]\n"
    "\n"
    "  table <family>        entries 0..N of a family (default N = 16)\n"
    "  poly <family> <n>     the n-th polynomial of a family\n"
    "  expand <c0> <c1> ...  coefficients of p(x) = c0 + c1 x + ... in the b_{m,λ}(x) basis\n"
    "  verify <id>...|all    check identities through order N (default N = 12)\n"
    "\n"
    "families: stirling1 stirling2 bell bell_r dbell bernoulli euler carlitz_euler\n"
    "          carlitz_bernoulli korobov dfalling\n";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Plain, Json, Csv, Latex };

struct Options {
    std::string command;
    std::vector<std::string> positionals;
    std::optional<std::size_t> nmax;
    std::optional<Rational> lambda;
    Format format = Format::Plain;
    bool ascii = false;
    int r = 2;
};

/// One emitted row; payload is a canonical string or a list of them.
struct OutputRecord {
    std::string id;
    std::size_t n = 0;
    std::variant<std::string, std::vector<std::string>> payload;
    std::optional<std::string> status;
    json extra = json::object();
};

std::size_t parse_count(const std::string& text, const char* what)
{
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw UsageError(std::string("invalid ") + what + ": '" + text + "'");
    return value;
}

Options parse(std::span<const std::string> args)
{
    if (args.empty())
        throw UsageError("missing command");
    Options o;
    o.command = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto value = [&]() -> const std::string& {
            if (i + 1 >= args.size())
                throw UsageError("flag " + a + " needs a value");
            return args[++i];
        };
        if (a == "--nmax") {
            o.nmax = parse_count(value(), "--nmax");
        } else if (a == "--lambda") {
            try {
                o.lambda = Rational::parse(value());
            } catch (const MathError& e) {
                throw UsageError(std::string("invalid --lambda: ") + e.what());
            }
        } else if (a == "--format") {
            static const std::map<std::string, Format> formats{
                {"plain", Format::Plain}, {"json", Format::Json}, {"csv", Format::Csv}, {"latex", Format::Latex}};
            const auto it = formats.find(value());
            if (it == formats.end())
                throw UsageError("unknown format '" + args[i] + "'");
            o.format = it->second;
        } else if (a == "--ascii") {
            o.ascii = true;
        } else if (a == "--r") {
            const std::size_t r = parse_count(value(), "--r");
            if (r < 1 || r > 1000)
                throw UsageError("--r must be a positive order");
            o.r = static_cast<int>(r);
        } else if (a.starts_with("--")) {
            throw UsageError("unknown flag " + a);
        } else {
            o.positionals.push_back(a);
        }
    }
    return o;
}

Notation notation_for(const Options& o)
{
    if (o.format == Format::Latex)
        return Notation::Latex;
    return o.ascii ? Notation::Ascii : Notation::Unicode;
}

std::string show(const LambdaScalar& s, const Options& o)
{
    if (o.lambda)
        return render(s.evaluate(*o.lambda), notation_for(o));
    return render(s, notation_for(o));
}

std::string show(const XPoly& p, const Options& o)
{
    if (o.lambda)
        return render(XPoly::from_rational(p.eval_lambda(*o.lambda)), notation_for(o));
    return render(p, notation_for(o));
}

std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string flat_payload(const OutputRecord& r)
{
    if (const auto* s = std::get_if<std::string>(&r.payload))
        return *s;
    const auto& v = std::get<std::vector<std::string>>(r.payload);
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i == 0 ? "" : " ") + v[i];
    return out;
}

json to_json(const OutputRecord& r)
{
    json j;
    j["id"] = r.id;
    j["n"] = r.n;
    if (const auto* s = std::get_if<std::string>(&r.payload))
        j["payload"] = *s;
    else
        j["payload"] = std::get<std::vector<std::string>>(r.payload);
    if (r.status)
        j["status"] = *r.status;
    for (const auto& [k, v] : r.extra.items())
        j[k] = v;
    return j;
}

void emit(const std::vector<OutputRecord>& records, Format format, std::ostream& out)
{
    switch (format) {
    case Format::Plain:
        for (const auto& r : records)
            out << flat_payload(r) << '\n';
        break;
    case Format::Csv:
        for (const auto& r : records)
            out << r.n << ',' << csv_cell(flat_payload(r)) << '\n';
        break;
    case Format::Latex:
        for (const auto& r : records)
            out << r.n << " & $" << flat_payload(r) << "$ \\\\\n";
        break;
    case Format::Json: {
        json arr = json::array();
        for (const auto& r : records)
            arr.push_back(to_json(r));
        out << arr.dump(2) << '\n';
        break;
    }
    }
}

// ----------------------------------------------------------------- families

const std::vector<std::string>& family_names()
{
    static const std::vector<std::string> names{"stirling1", "stirling2", "bell",  "bell_r",
                                                "dbell",     "bernoulli", "euler", "carlitz_euler",
                                                "carlitz_bernoulli", "korobov", "dfalling"};
    return names;
}

void require_family(const std::string& name)
{
    const auto& names = family_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw UsageError("unknown family '" + name + "'");
}

FamilyTable build_family(const std::string& name, std::size_t n_max, int r)
{
    if (name == "bell")
        return ordered_bell(n_max);
    if (name == "bell_r")
        return higher_order_ordered_bell(r, n_max);
    if (name == "dbell")
        return degenerate_ordered_bell(n_max);
    if (name == "bernoulli")
        return bernoulli_euler(n_max).bernoulli;
    if (name == "euler")
        return bernoulli_euler(n_max).euler;
    if (name == "carlitz_euler")
        return carlitz_degenerate(n_max).euler;
    if (name == "carlitz_bernoulli")
        return carlitz_degenerate(n_max).bernoulli;
    if (name == "korobov")
        return korobov(n_max);
    if (name == "dfalling")
        return degenerate_falling_factorial(n_max);
    throw UsageError("family '" + name + "' has no polynomial table");
}

int cmd_table(const Options& o, std::ostream& out)
{
    if (o.positionals.size() != 1)
        throw UsageError("table takes exactly one family");
    const std::string& family = o.positionals[0];
    require_family(family);
    const std::size_t n_max = o.nmax.value_or(16);

    std::vector<OutputRecord> records;
    if (family == "stirling1" || family == "stirling2") {
        const bool first = family == "stirling1";
        for (std::size_t n = 0; n <= n_max; ++n) {
            std::vector<std::string> row;
            for (std::size_t k = 0; k <= n; ++k) {
                const int ni = static_cast<int>(n);
                const int ki = static_cast<int>(k);
                row.push_back(render(first ? stirling1(ni, ki) : stirling2(ni, ki), notation_for(o)));
            }
            records.push_back({family, n, std::move(row), std::nullopt});
        }
    } else {
        const FamilyTable t = build_family(family, n_max, o.r);
        for (std::size_t n = 0; n <= n_max; ++n) {
            std::string payload = t.numbers.empty() ? show(t.polys[n], o) : show(t.numbers[n], o);
            records.push_back({family, n, std::move(payload), std::nullopt});
        }
    }
    emit(records, o.format, out);
    return kSuccess;
}

int cmd_poly(const Options& o, std::ostream& out)
{
    if (o.positionals.size() != 2)
        throw UsageError("poly takes a family and an order");
    const std::string& family = o.positionals[0];
    require_family(family);
    if (family == "stirling1" || family == "stirling2")
        throw UsageError("family '" + family + "' is not polynomial-valued");
    const std::size_t n = parse_count(o.positionals[1], "order");
    const FamilyTable t = build_family(family, n, o.r);
    emit({{family, n, show(t.polys[n], o), std::nullopt}}, o.format, out);
    return kSuccess;
}

int cmd_expand(const Options& o, std::ostream& out)
{
    if (o.positionals.empty())
        throw UsageError("expand needs the coefficients c0 c1 ... of p(x)");
    std::vector<LambdaScalar> coeffs;
    for (const auto& text : o.positionals) {
        try {
            coeffs.emplace_back(Rational::parse(text));
        } catch (const MathError& e) {
            throw UsageError(std::string("malformed coefficient: ") + e.what());
        }
    }
    const XPoly p(std::move(coeffs));
    const std::size_t deg = p.is_zero() ? 0 : static_cast<std::size_t>(p.degree());
    // f = t needs truncation 1 even for constant p
    const ShefferPair pair = degenerate_bell_pair(std::max<std::size_t>(deg, 1));
    std::vector<LambdaScalar> a = basis_expand(p, pair);
    if (a.empty())
        a.emplace_back();
    const auto basis = degenerate_ordered_bell(deg).polys;
    const bool exact = reconstruct(a, basis) == p;

    std::vector<OutputRecord> records;
    for (std::size_t m = 0; m < a.size(); ++m)
        records.push_back({"expand", m, show(a[m], o), std::nullopt});
    if (o.format == Format::Json) {
        records.push_back({"reconstruction", deg, std::string(exact ? "exact" : "mismatch"),
                           std::string(exact ? "pass" : "fail")});
        emit(records, o.format, out);
    } else if (o.format == Format::Plain) {
        for (const auto& r : records)
            out << "a_" << r.n << " = " << flat_payload(r) << '\n';
        out << "reconstruction: " << (exact ? "pass" : "fail") << '\n';
    } else {
        emit(records, o.format, out);
    }
    return exact ? kSuccess : kFailure;
}

int cmd_verify(const Options& o, const VerifyOptions& vo, std::ostream& out)
{
    if (o.positionals.empty())
        throw UsageError("verify needs identity ids or 'all'");
    if (o.lambda)
        throw UsageError("--lambda does not apply to verify");
    const std::size_t n_max = o.nmax.value_or(12);

    std::vector<IdentityReport> reports;
    const bool all = std::find(o.positionals.begin(), o.positionals.end(), "all") != o.positionals.end();
    if (all) {
        if (o.positionals.size() != 1)
            throw UsageError("'all' cannot be combined with other ids");
        reports = verify_all(n_max, vo);
    } else {
        for (const auto& id : o.positionals)
            if (!is_catalog_identity(id))
                throw UsageError("unknown identity '" + id + "'");
        for (const auto& id : o.positionals)
            reports.push_back(verify_identity(id, n_max, vo));
    }

    const Notation nt = notation_for(o);
    auto failure_json = [&](const IdentityFailure& f) {
        json j;
        j["n"] = f.n;
        if (f.y)
            j["y"] = f.y->to_string();
        j["witness"] = render(f.witness, nt);
        return j;
    };

    bool ok = true;
    std::vector<OutputRecord> records;
    for (const auto& rep : reports) {
        ok = ok && rep.pass;
        OutputRecord rec{rep.id, rep.n_max, rep.routes, std::string(rep.pass ? "pass" : "fail")};
        rec.extra["n_max"] = rep.n_max;
        if (rep.first_failure)
            rec.extra["first_failure"] = failure_json(*rep.first_failure);
        if (!rep.variants.empty()) {
            json vs = json::array();
            for (const auto& v : rep.variants) {
                json vj;
                vj["name"] = v.name;
                vj["status"] = v.holds ? "holds" : "fails";
                if (v.first_failure)
                    vj["first_failure"] = failure_json(*v.first_failure);
                vs.push_back(vj);
            }
            rec.extra["variants"] = vs;
        }
        records.push_back(std::move(rec));
    }

    switch (o.format) {
    case Format::Json:
        emit(records, o.format, out);
        break;
    case Format::Csv:
        out << "id,n_max,status,failure_n,witness\n";
        for (const auto& rep : reports) {
            out << rep.id << ',' << rep.n_max << ',' << (rep.pass ? "pass" : "fail") << ',';
            if (rep.first_failure)
                out << rep.first_failure->n << ',' << csv_cell(render(rep.first_failure->witness, nt));
            else
                out << ',';
            out << '\n';
        }
        break;
    case Format::Plain:
    case Format::Latex:
        for (const auto& rep : reports) {
            out << rep.id << ' ' << (rep.pass ? "pass" : "fail") << " n_max=" << rep.n_max;
            if (rep.first_failure) {
                out << " first failure at n=" << rep.first_failure->n;
                if (rep.first_failure->y)
                    out << " y=" << rep.first_failure->y->to_string();
                out << " difference " << render(rep.first_failure->witness, nt);
            }
            out << '\n';
            for (const auto& v : rep.variants) {
                out << "  variant [" << v.name << "]: " << (v.holds ? "holds" : "fails");
                if (v.first_failure)
                    out << " at n=" << v.first_failure->n;
                out << '\n';
            }
        }
        break;
    }
    return ok ? kSuccess : kFailure;
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    return run(args, out, err, VerifyOptions{});
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err,
        const umbral::VerifyOptions& verify_options)
{
    try {
        const Options o = parse(args);
        if (o.command == "--help" || o.command == "help") {
            out << kUsageText;
            return kSuccess;
        }
        if (o.command == "table")
            return cmd_table(o, out);
        if (o.command == "poly")
            return cmd_poly(o, out);
        if (o.command == "expand")
            return cmd_expand(o, out);
        if (o.command == "verify")
            return cmd_verify(o, verify_options, out);
        throw UsageError("unknown command '" + o.command + "'");
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n' << kUsageText;
        return kUsage;
    } catch (const PoleAtEvaluationPoint& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    } catch (const MathError& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

} // namespace dobell
