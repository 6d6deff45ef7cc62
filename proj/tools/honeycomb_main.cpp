#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "honey/breaking.hpp"
#include "honey/honeycomb.hpp"
#include "honey/json_io.hpp"
#include "honey/lift.hpp"
#include "honey/lr_oracle.hpp"
#include "honey/moebius.hpp"
#include "honey/nl_oracle.hpp"
#include "honey/render.hpp"

namespace {

using namespace honey;

Partition parse_partition(const std::string& text, const std::string& name) {
  Partition p;
  if (text.empty()) return p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      p.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(name + ": expected comma separated integers, got \"" + text + "\"");
    }
  }
  require_partition(p, name);
  return p;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Pipeline reports wrap the honeycomb under "honeycomb" (lift, integralize)
// or "witness" (saturate). Accept those documents wherever a bare honeycomb
// is expected.
std::string honeycomb_payload(const std::string& text) {
  const auto doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_object() && doc.contains("honeycomb")) return doc["honeycomb"].dump();
  if (doc.is_object() && doc.contains("witness")) return doc["witness"].dump();
  return text;
}

void emit(const std::string& outPath, const std::string& payload, const char* what) {
  if (outPath.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(outPath, std::ios::binary);
  if (!out || !(out << payload)) throw InputError("cannot write " + outPath);
  std::cout << what << " written to " << outPath << "\n";
}

int worker_count() {
  const char* env = std::getenv("HONEY_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  try {
    const int w = std::stoi(env);
    if (w < 1) throw std::invalid_argument(env);
    return w;
  } catch (const std::exception&) {
    throw InputError(std::string("HONEY_WORKERS must be a positive integer, got \"") + env + "\"");
  }
}

struct Triple {
  Partition lambda, mu, nu;
};

std::vector<Triple> sweep_triples(int maxParts, long long maxPart, bool evenOnly) {
  std::vector<Partition> ps;
  for_each_partition(maxParts, maxPart, [&](const Partition& p) { ps.push_back(p); });
  std::vector<Triple> out;
  for (const Partition& la : ps)
    for (const Partition& mu : ps)
      for (const Partition& nu : ps) {
        if (evenOnly && (weight(la) + weight(mu) + weight(nu)) % 2 != 0) continue;
        out.push_back({la, mu, nu});
      }
  return out;
}

// Runs fn over [0, count) on the requested workers and returns the indices
// where fn reported a mismatch, in increasing order.
std::vector<size_t> parallel_mismatches(size_t count, int workers,
                                        const std::function<bool(size_t)>& fn) {
  std::vector<size_t> bad;
  std::mutex mu;
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr firstError;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (size_t idx = next.fetch_add(1); idx < count; idx = next.fetch_add(1)) {
        try {
          if (!fn(idx)) {
            std::lock_guard<std::mutex> lock(mu);
            bad.push_back(idx);
          }
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!firstError) firstError = std::current_exception();
          return;
        }
      }
    });
  for (std::thread& t : pool) t.join();
  if (firstError) std::rethrow_exception(firstError);
  std::sort(bad.begin(), bad.end());
  return bad;
}

std::string triple_label(const Triple& t) {
  const auto one = [](const Partition& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
  };
  return one(t.lambda) + " " + one(t.mu) + " " + one(t.nu);
}

int crosscheck(const std::string& kind, int maxParts, long long maxPart) {
  const int workers = worker_count();
  size_t checked = 0;

  if (kind == "lr" || kind == "both") {
    const std::vector<Triple> triples = sweep_triples(maxParts, maxPart, false);
    const auto bad = parallel_mismatches(triples.size(), workers, [&](size_t idx) {
      const Triple& t = triples[idx];
      return count_lr(t.lambda, t.mu, t.nu, maxParts) == lr_oracle(t.lambda, t.mu, t.nu);
    });
    for (size_t idx : bad) std::cout << "lr mismatch at " << triple_label(triples[idx]) << "\n";
    if (!bad.empty())
      throw InvariantError("crosscheck: lr enumeration disagrees with the tableau formula");
    checked += triples.size();
  }

  if (kind == "nl" || kind == "both") {
    const std::vector<Triple> triples = sweep_triples(maxParts, maxPart, true);
    const auto bad = parallel_mismatches(triples.size(), workers, [&](size_t idx) {
      const Triple& t = triples[idx];
      return count_nl(t.lambda, t.mu, t.nu, maxPart > 0 ? maxPart : 1, maxParts) ==
             nl_oracle(t.lambda, t.mu, t.nu);
    });
    for (size_t idx : bad) std::cout << "nl mismatch at " << triple_label(triples[idx]) << "\n";
    if (!bad.empty())
      throw InvariantError("crosscheck: nl enumeration disagrees with the stretched formula");
    checked += triples.size();
  }

  std::cout << "checked " << checked << " triples, all agree\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact honeycomb computations: Littlewood-Richardson coefficients,"
               " Newell-Littlewood numbers, largest lifts, and saturation witnesses"};
  app.require_subcommand(1);

  std::string laText, muText, nuText;
  std::string method = "enumerate";
  std::string inPath, outPath, kind = "both";
  int n = 0;
  long long delta = 0, k = 0, maxPart = 2;
  int maxParts = 2;
  bool withColoring = false;

  const auto addTriple = [&](CLI::App* cmd) {
    cmd->add_option("--lambda", laText, "first partition, comma separated parts");
    cmd->add_option("--mu", muText, "second partition");
    cmd->add_option("--nu", nuText, "third partition");
  };

  CLI::App* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^lambda_{mu,nu}");
  addTriple(lr);
  lr->add_option("--n", n, "honeycomb size, default fits the inputs");
  lr->add_option("--method", method, "enumerate | formula")
      ->check(CLI::IsMember({"enumerate", "formula"}));

  CLI::App* nl = app.add_subcommand("nl", "Newell-Littlewood number N_{lambda,mu,nu}");
  addTriple(nl);
  nl->add_option("--n", n, "honeycomb size, default fits the inputs");
  nl->add_option("--delta", delta, "triangle scale, default fits the inputs");
  nl->add_option("--method", method, "enumerate | formula")
      ->check(CLI::IsMember({"enumerate", "formula"}));

  CLI::App* sat = app.add_subcommand("saturate", "saturation witness for (lambda, mu, nu)");
  addTriple(sat);
  sat->add_option("--k", k, "stretch factor whose count is known positive")->required();
  sat->add_option("--n", n, "honeycomb size, default fits the inputs");
  sat->add_option("--out", outPath, "write the witness report here");

  CLI::App* lift = app.add_subcommand("lift", "largest lift over a partition boundary");
  addTriple(lift);
  lift->add_option("--delta", delta, "triangle scale, default fits the inputs");
  lift->add_option("--n", n, "honeycomb size, default fits the inputs");
  lift->add_option("--out", outPath, "write the lift report here");

  CLI::App* integ = app.add_subcommand("integralize", "break a largest lift to integrality");
  integ->add_option("--in", inPath, "Moebius honeycomb json")->required();
  integ->add_option("--out", outPath, "write the breaking report here");

  CLI::App* render = app.add_subcommand("render", "draw a honeycomb json as SVG");
  render->add_option("--in", inPath, "honeycomb json, triangular or Moebius")->required();
  render->add_option("--out", outPath, "write the SVG here");
  render->add_flag("--coloring", withColoring,
                   "shade the fractional part of a Moebius honeycomb");

  CLI::App* cross = app.add_subcommand("crosscheck", "sweep enumerate against formula");
  cross->add_option("--kind", kind, "lr | nl | both")->check(CLI::IsMember({"lr", "nl", "both"}));
  cross->add_option("--max-n", maxParts, "partition length bound");
  cross->add_option("--max-part", maxPart, "largest part bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    const Partition la = parse_partition(laText, "lambda");
    const Partition mu = parse_partition(muText, "mu");
    const Partition nu = parse_partition(nuText, "nu");

    if (lr->parsed()) {
      if (method == "formula")
        std::cout << lr_oracle(la, mu, nu) << "\n";
      else if (n > 0)
        std::cout << count_lr(la, mu, nu, n) << "\n";
      else
        std::cout << count_lr(la, mu, nu) << "\n";
    } else if (nl->parsed()) {
      if (method == "formula")
        std::cout << nl_oracle(la, mu, nu) << "\n";
      else if (n > 0 || delta > 0) {
        const auto fit = [&](const Partition& p) {
          return std::max<long long>(p.empty() ? 0 : p.front(), 1);
        };
        const long long d =
            delta > 0 ? delta : std::max({fit(la), fit(mu), fit(nu)});
        const int size =
            n > 0 ? n : (int)std::max<size_t>({la.size(), mu.size(), nu.size(), 1});
        std::cout << count_nl(la, mu, nu, d, size) << "\n";
      } else
        std::cout << count_nl(la, mu, nu) << "\n";
    } else if (sat->parsed()) {
      const auto res = saturation_witness(la, mu, nu, k, n);
      if (!res.has_value()) {
        std::cout << "N=0\n";
      } else {
        emit(outPath, saturation_report_json(*res), "witness");
      }
    } else if (lift->parsed()) {
      const auto fit = [&](const Partition& p) {
        return std::max<long long>(p.empty() ? 0 : p.front(), 1);
      };
      const long long d = delta > 0 ? delta : std::max({fit(la), fit(mu), fit(nu)});
      const int size = n > 0 ? n : (int)std::max<size_t>({la.size(), mu.size(), nu.size(), 1});
      const LargestLift res = largest_lift(xi_from_partitions(la, mu, nu, d, size), Rat(d), size);
      emit(outPath, lift_report_json(res), "lift report");
    } else if (integ->parsed()) {
      const MoebiusHoneycomb h = mh_from_json(honeycomb_payload(slurp(inPath)));
      emit(outPath, integralize_report_json(integralize(h)), "breaking report");
    } else if (render->parsed()) {
      const std::string text = honeycomb_payload(slurp(inPath));
      std::string svg;
      if (json_is_moebius(text)) {
        const MoebiusHoneycomb h = mh_from_json(text);
        if (withColoring) {
          const Coloring c = color(h);
          svg = render_mh_svg(h, &c);
        } else {
          svg = render_mh_svg(h);
        }
      } else {
        svg = render_gl_svg(gl_from_json(text));
      }
      emit(outPath, svg, "svg");
    } else if (cross->parsed()) {
      return crosscheck(kind, maxParts, maxPart);
    }
  } catch (const InputError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  } catch (const InvariantError& ex) {
    std::cerr << "invariant violated: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
