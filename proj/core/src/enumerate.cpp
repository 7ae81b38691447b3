#include <algorithm>
#include <iterator>
#include <set>
#include <thread>

#include "origami/origami.hpp"

namespace origami {

namespace {

void partitions(std::size_t rest, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t p = std::min(rest, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(rest - p, p, cur, out);
    cur.pop_back();
  }
}

// mu in translation form for x = (1..p1)(p1+1..p1+p2)...
SPerm standard_mu(const std::vector<std::size_t>& parts, std::size_t d) {
  std::vector<Label> img(2 * d);
  Label start = 1;
  for (std::size_t p : parts) {
    for (std::size_t i = 0; i < p; ++i) {
      Label l = start + static_cast<Label>(i);
      Label xl = start + static_cast<Label>((i + 1) % p);
      img[label_index(l)] = -xl;
      img[label_index(-xl)] = l;
    }
    start += static_cast<Label>(p);
  }
  return SPerm::from_images(d, img);
}

// Visits every fixed-point-free involution of {0..m-1}.
template <class F>
void involutions(std::vector<Point>& img, std::vector<bool>& used, F&& visit) {
  const std::size_t m = img.size();
  Point first = 0;
  while (first < m && used[first]) ++first;
  if (first == m) {
    visit(img);
    return;
  }
  used[first] = true;
  for (Point j = first + 1; j < m; ++j) {
    if (used[j]) continue;
    used[j] = true;
    img[first] = j;
    img[j] = first;
    involutions(img, used, visit);
    used[j] = false;
  }
  used[first] = false;
}

std::set<Origami> enumerate_partition(const std::vector<std::size_t>& parts, std::size_t d) {
  const SPerm mu = standard_mu(parts, d);
  std::set<Origami> found;
  std::vector<Point> img(2 * d);
  std::vector<bool> used(2 * d, false);
  involutions(img, used, [&](const std::vector<Point>& nu_img) {
    Origami o(mu, SPerm::from_perm(Perm::from_images(nu_img)), true);
    if (o.connected()) found.insert(canonical_form(o));
  });
  return found;
}

}  // namespace

std::vector<Origami> enumerate(std::size_t d, unsigned threads) {
  if (d == 0) return {};
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::size_t> cur;
  partitions(d, d, cur, parts);

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(parts.size())));
  std::vector<std::set<Origami>> shards(threads);
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < parts.size(); i += threads) {
      shards[w].merge(enumerate_partition(parts[i], d));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::set<Origami> all;
  for (auto& s : shards) all.merge(s);
  return {std::make_move_iterator(all.begin()), std::make_move_iterator(all.end())};
}

}  // namespace origami
