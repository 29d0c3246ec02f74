// lorentzvol: volumes of Lorentz-space unit balls and what they buy you:
// volume tables, asymptotic scaling sequences, weak-to-strong volume ratios
// and entropy-number experiments.
//
// Exit codes: 0 ok, 2 bad usage or parameters, 3 precision flag under
// --strict, 4 set-family construction exhausted (partial results emitted).

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lorentzvol/asymptotics.hpp"
#include "lorentzvol/entropy.hpp"
#include "lorentzvol/output.hpp"
#include "lorentzvol/volume_exact.hpp"

namespace lv = lorentzvol;

namespace {

// "inf" (any case) or a positive real
double parse_exponent(const std::string& text, const char* flag) {
  std::string t = text;
  for (char& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "inf" || t == "infinity") return lv::kInf;
  try {
    size_t used = 0;
    double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument(std::string(flag) + ": expected a positive real or 'inf', got '" +
                                text + "'");
  }
}

std::string exponent_text(double v) {
  if (v == lv::kInf) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

int default_bits() {
  if (const char* env = std::getenv("LORENTZVOL_BITS")) {
    int bits = std::atoi(env);
    if (bits >= lv::PrecisionContext::kMinBits) return bits;
    std::fprintf(stderr, "warning: ignoring LORENTZVOL_BITS='%s' (need integer >= %d)\n", env,
                 lv::PrecisionContext::kMinBits);
  }
  return lv::PrecisionContext::kDefaultBits;
}

struct CommonOpts {
  int bits = default_bits();
  std::string format = "table";
  bool strict = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--bits", opts.bits, "mantissa bits for exact engines (>= 53)");
  cmd->add_option("--format", opts.format, "output format: table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  cmd->add_flag("--strict", opts.strict, "exit 3 when any result carries a precision flag");
}

int emit(const lv::OutputRecord& rec, const CommonOpts& opts, bool flagged) {
  std::fputs(lv::render(rec, lv::output_format_from_name(opts.format)).c_str(), stdout);
  if (opts.strict && flagged) return 3;
  return 0;
}

void push_volume_row(lv::OutputRecord& rec, const lv::VolumeResult& r) {
  rec.rows.push_back({lv::Cell::of_int(r.n), lv::Cell::of(exponent_text(r.params.p())),
                      lv::Cell::of(exponent_text(r.params.q())), lv::Cell::of(r.value),
                      lv::Cell::of(r.log_value), lv::Cell::of(std::string(method_name(r.method))),
                      lv::Cell::of(r.error_bound), lv::Cell::of(r.precision_flagged)});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"volumes of unit balls of finite-dimensional Lorentz sequence spaces"};
  app.require_subcommand(1);

  // ---- volume ----
  CommonOpts vol_opts;
  std::vector<int> vol_n{3};
  std::string vol_p = "1", vol_q = "inf", vol_method = "auto";
  std::uint64_t vol_samples = 1'000'000, vol_seed = 1;
  double vol_conf = 0.99;
  CLI::App* vol_cmd = app.add_subcommand("volume", "volume of B^n_{p,q} by a chosen method");
  vol_cmd->add_option("--n", vol_n, "dimension(s)")->delimiter(',');
  vol_cmd->add_option("--p", vol_p, "first exponent (positive real or 'inf')");
  vol_cmd->add_option("--q", vol_q, "second exponent (positive real or 'inf')");
  vol_cmd->add_option("--method", vol_method,
                      "auto, recursion, explicit, integral, product-q1, dirichlet, monte-carlo");
  vol_cmd->add_option("--samples", vol_samples, "Monte Carlo sample count");
  vol_cmd->add_option("--seed", vol_seed, "Monte Carlo seed");
  vol_cmd->add_option("--confidence", vol_conf, "Monte Carlo CI level");
  add_common(vol_cmd, vol_opts);

  // ---- table ----
  CommonOpts tab_opts;
  std::vector<double> tab_p{0.5, 1.0, 2.0, 100.0};
  int tab_nmax = 15;
  std::string tab_q = "inf";
  CLI::App* tab_cmd = app.add_subcommand("table", "volume grid: rows n, one column per p");
  tab_cmd->add_option("--p-list", tab_p, "p values (comma separated)")->delimiter(',');
  tab_cmd->add_option("--n-max", tab_nmax, "largest dimension");
  tab_cmd->add_option("--q", tab_q, "q exponent for every column");
  add_common(tab_cmd, tab_opts);

  // ---- asymptotics ----
  CommonOpts asy_opts;
  std::string asy_p = "1", asy_q = "inf";
  int asy_nmax = 30;
  std::uint64_t asy_samples = 1'000'000, asy_seed = 1;
  CLI::App* asy_cmd =
      app.add_subcommand("asymptotics", "scaled n-th-root volume sequence vol^{1/n}");
  asy_cmd->add_option("--p", asy_p, "first exponent");
  asy_cmd->add_option("--q", asy_q, "second exponent");
  asy_cmd->add_option("--n-max", asy_nmax, "largest dimension");
  asy_cmd->add_option("--samples", asy_samples, "Monte Carlo samples (fallback pairs)");
  asy_cmd->add_option("--seed", asy_seed, "Monte Carlo seed");
  add_common(asy_cmd, asy_opts);

  // ---- ratio ----
  CommonOpts rat_opts;
  double rat_p = 1.0;
  int rat_nmax = 10;
  CLI::App* rat_cmd =
      app.add_subcommand("ratio", "weak-to-Lebesgue volume ratio R_{p,n} with growth factors");
  rat_cmd->add_option("--p", rat_p, "exponent (0 < p < inf)");
  rat_cmd->add_option("--n-max", rat_nmax, "largest dimension");
  add_common(rat_cmd, rat_opts);

  // ---- entropy ----
  CommonOpts ent_opts;
  int ent_n = 64, ent_kmax = 0, ent_k = 4, ent_mu = 1, ent_nu = 1;
  std::uint64_t ent_seed = 1, ent_target = 0;
  bool ent_construct = false, ent_packing = false;
  CLI::App* ent_cmd = app.add_subcommand(
      "entropy", "entropy-number bound curves, code families and packings for l1-weak -> l1");
  ent_cmd->add_option("--n", ent_n, "ambient dimension");
  ent_cmd->add_option("--k-max", ent_kmax, "curve length (default 4n)");
  ent_cmd->add_flag("--construct", ent_construct, "build a coding set family");
  ent_cmd->add_option("--k", ent_k, "set size for --construct");
  ent_cmd->add_option("--target", ent_target, "family size override for --construct");
  ent_cmd->add_flag("--packing", ent_packing, "build the layered packing vectors");
  ent_cmd->add_option("--mu", ent_mu, "lowest level for --packing");
  ent_cmd->add_option("--nu", ent_nu, "highest level for --packing");
  ent_cmd->add_option("--seed", ent_seed, "construction seed");
  add_common(ent_cmd, ent_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (vol_cmd->parsed()) {
      lv::PrecisionContext ctx(vol_opts.bits);
      lv::Params params(parse_exponent(vol_p, "--p"), parse_exponent(vol_q, "--q"));
      lv::Method method = lv::method_from_name(vol_method);
      lv::McConfig mc{vol_samples, vol_seed, vol_conf};

      lv::OutputRecord rec;
      rec.command = "volume";
      rec.inputs = {{"p", vol_p},
                    {"q", vol_q},
                    {"method", vol_method},
                    {"bits", std::to_string(vol_opts.bits)},
                    {"samples", std::to_string(vol_samples)},
                    {"seed", std::to_string(vol_seed)}};
      rec.columns = {{"n"},    {"p"},          {"q"},           {"value"},
                     {"log_value"}, {"method"}, {"error_bound"}, {"precision_flagged"}};
      bool flagged = false;
      for (int n : vol_n) {
        lv::VolumeResult r = lv::vol_ball(n, params, method, ctx, mc);
        flagged = flagged || r.precision_flagged;
        if (r.precision_flagged)
          rec.warnings.push_back("precision flag at n = " + std::to_string(n));
        if (r.mc_low_hits)
          rec.warnings.push_back("mc: fewer than 100 hits at n = " + std::to_string(n) +
                                 "; CI unreliable");
        push_volume_row(rec, r);
      }
      return emit(rec, vol_opts, flagged);
    }

    if (tab_cmd->parsed()) {
      lv::PrecisionContext ctx(tab_opts.bits);
      double q = parse_exponent(tab_q, "--q");
      if (tab_nmax < 1) throw std::invalid_argument("table: --n-max must be >= 1");

      lv::OutputRecord rec;
      rec.command = "table";
      std::string plist;
      for (size_t i = 0; i < tab_p.size(); ++i)
        plist += (i ? "," : "") + exponent_text(tab_p[i]);
      rec.inputs = {{"p-list", plist}, {"q", tab_q}, {"n-max", std::to_string(tab_nmax)},
                    {"bits", std::to_string(tab_opts.bits)}};
      rec.columns.push_back({"n"});
      for (double p : tab_p) rec.columns.push_back({"p=" + exponent_text(p), true});
      rec.columns.push_back({"method"});
      rec.columns.push_back({"max_error_bound"});

      bool flagged = false;
      std::vector<std::string> methods;
      for (int n = 1; n <= tab_nmax; ++n) {
        std::vector<lv::Cell> row{lv::Cell::of_int(n)};
        methods.clear();
        double max_err = 0.0;
        for (double p : tab_p) {
          lv::VolumeResult r =
              lv::vol_ball(n, lv::Params(p, q), lv::Method::automatic, ctx);
          flagged = flagged || r.precision_flagged;
          row.push_back(lv::Cell::of(r.value));
          max_err = std::max(max_err, r.error_bound);
          std::string m = method_name(r.method);
          bool seen = false;
          for (const auto& s : methods) seen = seen || s == m;
          if (!seen) methods.push_back(m);
        }
        std::string joined;
        for (size_t i = 0; i < methods.size(); ++i) joined += (i ? "/" : "") + methods[i];
        row.push_back(lv::Cell::of(joined));
        row.push_back(lv::Cell::of(max_err));
        rec.rows.push_back(std::move(row));
      }
      if (flagged) rec.warnings.push_back("precision flag raised in at least one cell");
      return emit(rec, tab_opts, flagged);
    }

    if (asy_cmd->parsed()) {
      lv::PrecisionContext ctx(asy_opts.bits);
      lv::Params params(parse_exponent(asy_p, "--p"), parse_exponent(asy_q, "--q"));
      lv::McConfig mc{asy_samples, asy_seed, 0.99};
      lv::SequenceResult seq = lv::root_volume_sequence(params, asy_nmax, ctx, mc);

      lv::OutputRecord rec;
      rec.command = "asymptotics";
      rec.inputs = {{"p", asy_p},
                    {"q", asy_q},
                    {"n-max", std::to_string(asy_nmax)},
                    {"bits", std::to_string(asy_opts.bits)},
                    {"method", method_name(seq.method)}};
      rec.columns = {{"n"}, {"root_volume"}, {"normalized"}};
      for (const auto& pt : seq.points)
        rec.rows.push_back(
            {lv::Cell::of_int(pt.n), lv::Cell::of(pt.raw), lv::Cell::of(pt.normalized)});
      rec.warnings = seq.warnings;
      return emit(rec, asy_opts, !seq.warnings.empty());
    }

    if (rat_cmd->parsed()) {
      lv::PrecisionContext ctx(rat_opts.bits);
      lv::RatioResult ratios = lv::ratio_sequence(rat_p, rat_nmax, ctx);

      lv::OutputRecord rec;
      rec.command = "ratio";
      rec.inputs = {{"p", exponent_text(rat_p)},
                    {"n-max", std::to_string(rat_nmax)},
                    {"bits", std::to_string(rat_opts.bits)}};
      rec.columns = {{"n"}, {"ratio"}, {"lower_bound"}, {"growth"}};
      for (const auto& pt : ratios.points)
        rec.rows.push_back({lv::Cell::of_int(pt.n), lv::Cell::of(pt.ratio),
                            lv::Cell::of(pt.lower_bound), lv::Cell::of(pt.growth)});
      rec.warnings = ratios.warnings;
      return emit(rec, rat_opts, !ratios.warnings.empty());
    }

    if (ent_cmd->parsed()) {
      lv::PrecisionContext ctx(ent_opts.bits);
      lv::OutputRecord rec;
      rec.command = "entropy";

      if (ent_construct && !ent_packing) {
        rec.inputs = {{"n", std::to_string(ent_n)},
                      {"k", std::to_string(ent_k)},
                      {"seed", std::to_string(ent_seed)}};
        rec.columns = {{"index"}, {"set_size"}, {"certified"}, {"family_size"}, {"target"}};
        auto add_rows = [&](const lv::IndexSetFamily& family) {
          for (size_t i = 0; i < family.sets.size(); ++i)
            rec.rows.push_back({lv::Cell::of_int(static_cast<long long>(i)),
                                lv::Cell::of_int(static_cast<long long>(family.sets[i].size())),
                                lv::Cell::of(family.certified),
                                lv::Cell::of_int(static_cast<long long>(family.sets.size())),
                                lv::Cell::of_int(static_cast<long long>(family.target))});
        };
        try {
          lv::IndexSetFamily family = lv::construct_code(ent_n, ent_k, ent_seed, ent_target);
          add_rows(family);
          return emit(rec, ent_opts, false);
        } catch (const lv::ConstructionExhausted& ex) {
          add_rows(ex.partial);
          rec.warnings.push_back(ex.what());
          emit(rec, ent_opts, false);
          return 4;
        }
      }

      if (ent_packing) {
        rec.inputs = {{"n", std::to_string(ent_n)},
                      {"mu", std::to_string(ent_mu)},
                      {"nu", std::to_string(ent_nu)},
                      {"seed", std::to_string(ent_seed)}};
        rec.columns = {{"family_size"}, {"weak_norm_bound"}, {"min_pairwise_l1"}, {"verified"}};
        try {
          lv::PackingFamily fam = lv::build_packing(ent_n, ent_mu, ent_nu, ent_seed);
          rec.rows.push_back({lv::Cell::of_int(static_cast<long long>(fam.family_size)),
                              lv::Cell::of(fam.weak_norm_bound),
                              lv::Cell::of(fam.min_pairwise_l1),
                              lv::Cell::of(lv::verify_packing_exact(fam))});
          return emit(rec, ent_opts, false);
        } catch (const lv::ConstructionExhausted& ex) {
          rec.warnings.push_back(ex.what());
          emit(rec, ent_opts, false);
          return 4;
        }
      }

      int k_max = ent_kmax > 0 ? ent_kmax : 4 * ent_n;
      lv::EntropyBoundCurve curve = lv::entropy_bound_curve(ent_n, k_max, ctx);
      char ratio_buf[64], calib_buf[80];
      std::snprintf(ratio_buf, sizeof(ratio_buf), "%.17g", curve.vol_ratio_root);
      std::snprintf(calib_buf, sizeof(calib_buf), "C1=%.17g C2=%.17g", curve.upper_log_coeff,
                    curve.upper_exp_coeff);
      rec.inputs = {{"n", std::to_string(ent_n)},
                    {"k-max", std::to_string(k_max)},
                    {"bits", std::to_string(ent_opts.bits)},
                    {"vol_ratio_root", ratio_buf},
                    {"gamma", std::to_string(curve.gamma)},
                    {"calibration", calib_buf}};
      rec.columns = {{"k"}, {"lower"}, {"upper"}};
      for (const auto& pt : curve.points)
        rec.rows.push_back(
            {lv::Cell::of_int(pt.k), lv::Cell::of(pt.lower), lv::Cell::of(pt.upper)});
      return emit(rec, ent_opts, false);
    }
  } catch (const std::invalid_argument& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 2;
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 1;
  }
  return 0;
}
