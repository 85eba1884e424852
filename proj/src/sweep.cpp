#include "airydet/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <thread>

#include "airydet/asymptotics.hpp"
#include "airydet/errors.hpp"
#include "airydet/fredholm.hpp"
#include "airydet/kpz_tail.hpp"

namespace airydet {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<double> parse_axis(const std::string& text) {
  auto fail = [&](const std::string& why) {
    throw invalid_argument_error("axis '" + text + "': " + why);
  };
  std::vector<double> out;
  if (text.rfind("linspace:", 0) == 0 || text.rfind("logspace:", 0) == 0) {
    const bool logspace = text[0] == 'l' && text[2] == 'g';
    std::istringstream ss(text.substr(9));
    double lo, hi;
    long n;
    char c1, c2;
    if (!(ss >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':' || n < 1) {
      fail("expected lo:hi:n");
    }
    if (logspace && (lo <= 0.0 || hi <= 0.0)) fail("logspace endpoints must be positive");
    for (long i = 0; i < n; ++i) {
      const double f = n == 1 ? 0.0 : double(i) / double(n - 1);
      out.push_back(logspace ? lo * std::pow(hi / lo, f) : lo + (hi - lo) * f);
    }
    return out;
  }
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t pos = 0;
    double v;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      fail("bad number '" + item + "'");
      return out;
    }
    if (pos != item.size()) fail("bad number '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) fail("empty");
  return out;
}

SigmaModel resolve_model(const std::string& id) {
  if (id == "kpz") return make_kpz_model();
  if (id == "cutoff") return make_cutoff_model();
  if (id == "zero") return make_zero_model();
  if (std::filesystem::exists(id)) return parse_model_file(id);
  throw invalid_argument_error("unknown model '" + id +
                               "'; valid ids: kpz, cutoff, zero, or a model-file path");
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
  const bool st_axes = !spec.ss.empty() || !spec.Ts.empty();
  if (st_axes && (!spec.xs.empty() || !spec.ts.empty())) {
    throw invalid_argument_error("run_sweep: give either (x,t) axes or (s,T) axes, not both");
  }
  std::vector<std::pair<double, double>> grid;  // (x, t)
  std::vector<std::pair<double, double>> st;
  if (st_axes) {
    if (spec.ss.empty() || spec.Ts.empty()) {
      throw invalid_argument_error("run_sweep: both --s and --T axes are required");
    }
    for (double s : spec.ss) {
      for (double T : spec.Ts) {
        const XTPoint p = st_to_xt(s, T);
        grid.emplace_back(p.x, p.t);
        st.emplace_back(s, T);
      }
    }
  } else {
    if (spec.xs.empty() || spec.ts.empty()) {
      throw invalid_argument_error("run_sweep: both --x and --t axes are required");
    }
    for (double x : spec.xs) {
      for (double t : spec.ts) {
        grid.emplace_back(x, t);
        st.emplace_back(0.0, 0.0);
      }
    }
  }

  const SigmaModel model = resolve_model(spec.model_id);
  std::vector<SweepRecord> records(grid.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::string error_message;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= grid.size() || failed.load()) break;
      try {
        SweepRecord r;
        r.x = grid[i].first;
        r.t = grid[i].second;
        r.s = st[i].first;
        r.T = st[i].second;
        DetJob job;
        job.model = model;
        job.x = r.x;
        job.t = r.t;
        job.order = spec.order;
        const DetResult det = log_q_sigma(job);
        r.log_det = det.log_det;
        r.eig_min = det.eig_min;
        r.eig_max = det.eig_max;
        r.order_used = det.order_used;
        r.stable = det.stable;
        if (model.admissible() && r.x > 0.0) {
          r.asymp_total = logq_asymptotic(r.x, r.t, model).total;
          r.gap = r.log_det - r.asymp_total;
        } else {
          r.asymp_total = std::nan("");
          r.gap = std::nan("");
        }
        if (spec.with_u) {
          r.u_fd = u_sigma_fd(model, r.x, r.t).value;
          r.u_asymp = (model.admissible() && r.x > 0.0)
                          ? u_asymptotic(r.x, r.t, model).total
                          : std::nan("");
        } else {
          r.u_fd = std::nan("");
          r.u_asymp = std::nan("");
        }
        records[i] = r;
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        failed.store(true);
        error_message = e.what();
        break;
      }
    }
  };

  const int jobs = std::max(1, spec.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) throw near_singular_error("run_sweep: " + error_message);
  return records;
}

namespace {

std::vector<std::string> record_fields(bool st_axes, bool with_u) {
  std::vector<std::string> f;
  if (st_axes) {
    f.push_back("s");
    f.push_back("T");
  }
  f.insert(f.end(), {"x", "t", "log_det", "eig_min", "eig_max", "order_used", "stable",
                     "asymp_total", "gap"});
  if (with_u) {
    f.push_back("u_fd");
    f.push_back("u_asymp");
  }
  return f;
}

std::vector<std::string> record_values(const SweepRecord& r, bool st_axes, bool with_u) {
  std::vector<std::string> v;
  if (st_axes) {
    v.push_back(format_double(r.s));
    v.push_back(format_double(r.T));
  }
  v.insert(v.end(), {format_double(r.x), format_double(r.t), format_double(r.log_det),
                     format_double(r.eig_min), format_double(r.eig_max),
                     std::to_string(r.order_used), r.stable ? "1" : "0",
                     format_double(r.asymp_total), format_double(r.gap)});
  if (with_u) {
    v.push_back(format_double(r.u_fd));
    v.push_back(format_double(r.u_asymp));
  }
  return v;
}

}  // namespace

std::string sweep_to_csv(const std::vector<SweepRecord>& records, bool st_axes, bool with_u) {
  std::string out;
  const auto fields = record_fields(st_axes, with_u);
  for (size_t i = 0; i < fields.size(); ++i) {
    out += fields[i];
    out += (i + 1 < fields.size()) ? "," : "\n";
  }
  for (const SweepRecord& r : records) {
    const auto values = record_values(r, st_axes, with_u);
    for (size_t i = 0; i < values.size(); ++i) {
      out += values[i];
      out += (i + 1 < values.size()) ? "," : "\n";
    }
  }
  return out;
}

std::string sweep_to_json(const std::vector<SweepRecord>& records, bool st_axes, bool with_u) {
  const auto fields = record_fields(st_axes, with_u);
  std::string out = "[\n";
  for (size_t k = 0; k < records.size(); ++k) {
    const auto values = record_values(records[k], st_axes, with_u);
    out += "  {";
    for (size_t i = 0; i < fields.size(); ++i) {
      out += "\"" + fields[i] + "\": ";
      const std::string& v = values[i];
      const bool numeric = v != "nan" && v != "inf" && v != "-inf";
      out += numeric ? v : ("\"" + v + "\"");
      if (i + 1 < fields.size()) out += ", ";
    }
    out += k + 1 < records.size() ? "},\n" : "}\n";
  }
  out += "]\n";
  return out;
}

}  // namespace airydet
