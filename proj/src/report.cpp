#include "bihom/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "bihom/sweep.hpp"

namespace bihom {

bool VerificationReport::overall() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass || c.informational; });
}

void VerificationReport::add(std::string name, bool pass, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.pass = pass;
  c.detail = std::move(detail);
  checks.push_back(std::move(c));
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (Check c : other.checks) {
    c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool VerificationReport::passed(const std::string& name) const {
  const Check* c = find(name);
  return c != nullptr && c->pass;
}

std::string VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass && !c.informational) return c.name;
  return {};
}

unsigned sweep_threads() {
  if (const char* env = std::getenv("BIHOMLIE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

// Scans tuples whose first index is `first`, in lexicographic order.
std::optional<Witness> scan_slice(std::size_t n, std::size_t k, std::size_t first,
                                  const TupleCheck& check) {
  std::vector<std::size_t> t(k, 0);
  t[0] = first;
  while (true) {
    Vec r = check(t);
    if (!is_zero(r)) return Witness{t, std::move(r)};
    std::size_t pos = k;
    while (pos > 1) {
      --pos;
      if (++t[pos] < n) break;
      t[pos] = 0;
      if (pos == 1) return std::nullopt;
    }
    if (k == 1) return std::nullopt;
  }
}

}  // namespace

std::optional<Witness> first_failure(std::size_t n, std::size_t k, const TupleCheck& check) {
  if (n == 0) return std::nullopt;
  if (k == 0) {
    Vec r = check({});
    if (!is_zero(r)) return Witness{{}, std::move(r)};
    return std::nullopt;
  }
  const unsigned workers = std::max(1U, std::min<unsigned>(sweep_threads(), static_cast<unsigned>(n)));
  std::vector<std::optional<Witness>> found(n);
  if (workers == 1) {
    for (std::size_t f = 0; f < n; ++f)
      if ((found[f] = scan_slice(n, k, f, check))) return found[f];
    return std::nullopt;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{n};  // smallest first index with a failure so far
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    try {
      for (std::size_t f = next++; f < n; f = next++) {
        if (f > best.load()) break;
        found[f] = scan_slice(n, k, f, check);
        if (found[f]) {
          std::size_t cur = best.load();
          while (f < cur && !best.compare_exchange_weak(cur, f)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  for (std::size_t f = 0; f < n; ++f)
    if (found[f]) return found[f];
  return std::nullopt;
}

Check sweep_check(std::string name, std::size_t n, std::size_t k, const TupleCheck& check) {
  Check c;
  c.name = std::move(name);
  c.witness = first_failure(n, k, check);
  c.pass = !c.witness.has_value();
  return c;
}

}  // namespace bihom
