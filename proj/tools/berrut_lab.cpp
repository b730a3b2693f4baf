// berrut_lab: interpolation, convergence studies, limit-set queries and
// the verification suite for Berrut's rational interpolant on equally
// spaced nodes. CSV output is deterministic for a fixed seed.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "berrut/barycentric.hpp"
#include "berrut/denom_asymptotics.hpp"
#include "berrut/error_analysis.hpp"
#include "berrut/grid.hpp"
#include "berrut/limits.hpp"
#include "berrut/models.hpp"
#include "berrut/verify.hpp"

namespace {

using namespace berrut;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Range grammar: "a:b" (step 1), "a:b:s" (step s), "a:b:*k" (geometric).
std::vector<int> parse_range(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty() || parts.size() > 3)
        throw std::invalid_argument("bad range spec: " + spec);

    const int a = std::stoi(parts[0]);
    const int b = parts.size() > 1 ? std::stoi(parts[1]) : a;
    std::vector<int> out;
    if (parts.size() == 3 && !parts[2].empty() && parts[2][0] == '*') {
        const int factor = std::stoi(parts[2].substr(1));
        if (factor < 2) throw std::invalid_argument("geometric factor must be >= 2");
        for (long long n = a; n <= b; n *= factor) out.push_back(static_cast<int>(n));
    } else {
        const int step = parts.size() == 3 ? std::stoi(parts[2]) : 1;
        if (step < 1) throw std::invalid_argument("step must be >= 1");
        for (long long n = a; n <= b; n += step) out.push_back(static_cast<int>(n));
    }
    if (out.empty()) throw std::invalid_argument("empty range: " + spec);
    return out;
}

class Writer {
  public:
    Writer(const std::string& path, bool csv) : csv_(csv) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary); // LF endings regardless of platform
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }
    bool csv() const { return csv_; }
    void schema_header(const std::string& columns) {
        if (csv_) out() << "#schema=1\n" << columns << "\n";
    }

  private:
    std::ofstream file_;
    bool csv_;
};

int cmd_interpolate(const std::string& fn, const std::string& range,
                    const std::string& scheme_name, const std::vector<double>& xs,
                    Writer& w) {
    const FunctionModel& model = model_by_name(fn);
    const WeightScheme scheme = scheme_name == "halved" ? WeightScheme::endpoint_halved()
                                                        : WeightScheme::berrut();
    w.schema_header("n,x,value,error");
    for (int n : parse_range(range)) {
        const SampledFunction samples = SampledFunction::sample(model.f, n);
        for (double x : xs) {
            if (!(x >= -1.0 && x <= 1.0))
                throw std::invalid_argument("x outside [-1,1]");
            const double v = evaluate(samples, scheme, x);
            const double err = v - model.f(x);
            if (w.csv())
                w.out() << n << ',' << num(x) << ',' << num(v) << ',' << num(err) << "\n";
            else
                w.out() << "n=" << n << " x=" << num(x) << " value=" << num(v)
                        << " error=" << num(err) << "\n";
        }
    }
    return kExitOk;
}

int cmd_convergence(const std::string& fn, const std::string& parity_name,
                    const std::string& range, int probes, Writer& w) {
    const FunctionModel& model = model_by_name(fn);
    std::vector<Parity> parities;
    if (parity_name == "odd") parities = {Parity::Odd};
    else if (parity_name == "even") parities = {Parity::Even};
    else if (parity_name == "both") parities = {Parity::Odd, Parity::Even};
    else throw std::invalid_argument("parity must be odd, even or both");

    const std::vector<int> all = parse_range(range);
    w.schema_header("n,sup_err,scaled_err,bias_corrected,bv_bound_rhs,bound_satisfied,warning");

    std::string warning;
    double rhs = 0.0;
    if (model.tv_fprime) {
        rhs = *model.tv_fprime / 2.0 +
              std::max(bias_sup_norm(model, Parity::Odd, probes),
                       bias_sup_norm(model, Parity::Even, probes)) +
              1e-6;
    } else {
        warning = "no tv_fprime; variation bound skipped";
    }

    for (Parity parity : parities) {
        std::vector<int> ns;
        for (int n : all)
            if ((parity == Parity::Odd) == (n % 2 != 0)) ns.push_back(n);
        if (ns.empty()) continue;
        const auto records = uniform_study(model, ns, parity, probes);
        for (const ConvergenceRecord& rec : records) {
            const bool satisfied = model.tv_fprime && rec.scaled_err <= rhs;
            if (w.csv()) {
                w.out() << rec.n << ',' << num(rec.sup_err) << ',' << num(rec.scaled_err)
                        << ',' << num(rec.bias_corrected) << ','
                        << (model.tv_fprime ? num(rhs) : std::string()) << ','
                        << (model.tv_fprime ? (satisfied ? "true" : "false") : std::string())
                        << ',' << warning << "\n";
            } else {
                w.out() << "n=" << rec.n << " sup_err=" << num(rec.sup_err)
                        << " scaled=" << num(rec.scaled_err)
                        << " bias_corrected=" << num(rec.bias_corrected);
                if (model.tv_fprime)
                    w.out() << " bound=" << num(rhs)
                            << " satisfied=" << (satisfied ? "true" : "false");
                if (!warning.empty()) w.out() << " warning=" << warning;
                w.out() << "\n";
            }
        }
    }
    return kExitOk;
}

std::optional<RationalPoint> parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return std::nullopt;
    const long long num = std::stoll(s.substr(0, slash));
    const long long den = std::stoll(s.substr(slash + 1));
    return RationalPoint::of(num, den);
}

void print_limit_set(Writer& w, const std::string& set_name, const LimitSet& set) {
    const char* parity = set.parity == Parity::Odd ? "odd" : "even";
    if (set.is_interval) {
        if (w.csv()) {
            w.out() << set_name << ',' << parity << ",interval,lo," << num(set.lo) << "\n";
            w.out() << set_name << ',' << parity << ",interval,hi," << num(set.hi) << "\n";
        } else {
            w.out() << set_name << " (" << parity << "): interval [" << num(set.lo) << ", "
                    << num(set.hi) << "]\n";
        }
        return;
    }
    if (w.csv()) {
        int i = 0;
        for (double v : set.values)
            w.out() << set_name << ',' << parity << ",finite," << i++ << ',' << num(v) << "\n";
        if (set.values.empty())
            w.out() << set_name << ',' << parity << ",finite,," << "\n";
    } else {
        w.out() << set_name << " (" << parity << "): {";
        for (std::size_t i = 0; i < set.values.size(); ++i)
            w.out() << (i ? ", " : " ") << num(set.values[i]);
        w.out() << (set.values.empty() ? "}" : " }") << "\n";
    }
}

int cmd_limits(const std::string& rational, double irrational, bool have_irrational,
               const std::string& fn, const std::string& parity_name, Writer& w) {
    std::vector<Parity> parities;
    if (parity_name == "odd") parities = {Parity::Odd};
    else if (parity_name == "even") parities = {Parity::Even};
    else parities = {Parity::Odd, Parity::Even};

    w.schema_header("set,parity,kind,item,value");

    std::optional<RationalPoint> xr;
    double x = irrational;
    if (!rational.empty()) {
        xr = parse_rational(rational);
        if (!xr) throw std::invalid_argument("rational must be given as num/den");
        x = xr->value();
    } else if (!have_irrational) {
        throw std::invalid_argument("need --rational or --irrational");
    }

    for (Parity parity : parities) {
        if (xr) print_limit_set(w, "denominator", denominator_limit_set(*xr, parity));
        if (!fn.empty()) {
            const FunctionModel& model = model_by_name(fn);
            print_limit_set(w, "error", error_limit_set(model, x, xr, parity));
        }
    }
    return kExitOk;
}

int cmd_verify(const std::vector<std::string>& only, std::uint64_t seed, int samples,
               const std::vector<long long>& m_values, Writer& w) {
    VerifyOptions opt;
    opt.seed = seed;
    opt.samples = samples;
    if (!m_values.empty())
        opt.m_values.assign(m_values.begin(), m_values.end());

    const auto results = run_verify(opt, only);
    bool all_pass = true;
    for (const SectionResult& r : results) {
        all_pass = all_pass && r.pass;
        w.out() << (r.pass ? "PASS " : "FAIL ") << r.name << "\n";
        for (const std::string& line : r.lines) w.out() << "  " << line << "\n";
    }
    w.out() << (all_pass ? "all sections passed\n" : "some sections failed\n");
    return all_pass ? kExitOk : kExitVerifyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Berrut interpolant laboratory"};
    app.require_subcommand(1);

    std::string fn, range = "1:1", scheme = "berrut", parity = "both";
    std::string output, format = "csv", rational;
    std::vector<double> xs;
    double irrational = 0.0;
    bool have_irrational = false;
    int probes = 2001, samples = 1000;
    std::uint64_t seed = 0;
    std::vector<std::string> only;
    std::vector<long long> m_values;

    auto* interp = app.add_subcommand("interpolate", "evaluate the interpolant");
    interp->add_option("--fn", fn, "function model name")->required();
    interp->add_option("--n", range, "grid sizes (a:b, a:b:s or a:b:*k)")->required();
    interp->add_option("--scheme", scheme, "berrut or halved")
        ->check(CLI::IsMember({"berrut", "halved"}));
    interp->add_option("--x", xs, "evaluation points")->required()->expected(-1);

    auto* conv = app.add_subcommand("convergence", "sup-norm convergence study");
    conv->add_option("--fn", fn, "function model name")->required();
    conv->add_option("--parity", parity, "odd, even or both")
        ->check(CLI::IsMember({"odd", "even", "both"}));
    conv->add_option("--n", range, "grid sizes (a:b, a:b:s or a:b:*k)")->required();
    conv->add_option("--probes", probes, "probe-grid size (default 2001)");

    auto* lim = app.add_subcommand("limits", "accumulation sets of the scaled error");
    lim->add_option("--rational", rational, "x + 1 = num/den in lowest terms");
    auto* irr = lim->add_option("--irrational", irrational,
                                "x declared irrational (value in (-1,1))");
    lim->add_option("--fn", fn, "function model name (adds error sets)");
    lim->add_option("--parity", parity, "odd, even or both")
        ->check(CLI::IsMember({"odd", "even", "both"}));

    auto* ver = app.add_subcommand("verify", "run the verification sections");
    ver->add_option("--only", only, "run only the named sections")->expected(-1);
    ver->add_option("--samples", samples, "random samples per randomized section");
    ver->add_option("--m", m_values, "main-term sizes")->delimiter(',');
    ver->add_option("--seed", seed, "seed for randomized sections");

    for (auto* sub : {interp, conv, lim, ver}) {
        sub->add_option("--output", output, "write to file instead of stdout");
        sub->add_option("--format", format, "csv or text")
            ->check(CLI::IsMember({"csv", "text"}));
    }

    try {
        app.parse(argc, argv);
        have_irrational = irr->count() > 0;
        Writer writer(output, format == "csv");
        if (interp->parsed()) return cmd_interpolate(fn, range, scheme, xs, writer);
        if (conv->parsed()) return cmd_convergence(fn, parity, range, probes, writer);
        if (lim->parsed())
            return cmd_limits(rational, irrational, have_irrational, fn, parity, writer);
        if (ver->parsed()) return cmd_verify(only, seed, samples, m_values, writer);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
