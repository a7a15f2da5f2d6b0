#pragma once

#include <atomic>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <zlib.h>

#include "leakaudit/corpus.hpp"
#include "leakaudit/util/fs.hpp"

namespace testing_support {

namespace fs = std::filesystem;

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    std::random_device rd;
    path_ = fs::temp_directory_path() /
            ("leakaudit-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& rel) const { return path_ / rel; }

  fs::path write(const std::string& rel, const std::string& content) const {
    const auto p = path_ / rel;
    fs::create_directories(p.parent_path());
    leakaudit::util::write_file_atomic(p, content);
    return p;
  }

 private:
  fs::path path_;
};

inline leakaudit::Document doc(std::string id, std::string content, std::optional<leakaudit::Date> created = {},
                               std::string language = "java", std::string dataset = "ds") {
  leakaudit::Document d;
  d.id = std::move(id);
  d.dataset = std::move(dataset);
  d.language = std::move(language);
  d.path = d.id + ".txt";
  d.content = std::move(content);
  d.created_at = created;
  return d;
}

inline leakaudit::Corpus corpus_of(std::vector<leakaudit::Document> docs, std::string dataset = "ds") {
  leakaudit::Corpus c{std::move(dataset), std::move(docs)};
  leakaudit::normalize(c);
  return c;
}

/// Whitespace-separated words drawn from a vocabulary of `vocab` words.
inline std::string random_words(std::mt19937_64& rng, std::size_t count, std::size_t vocab = 5000) {
  std::uniform_int_distribution<std::size_t> pick(0, vocab - 1);
  std::string out;
  for (std::size_t i = 0; i < count; ++i) {
    if (i) out += ' ';
    out += "w" + std::to_string(pick(rng));
  }
  return out;
}

struct TarFile {
  std::string path;
  std::string content;
  char type = '0';
};

inline void tar_octal(char* dst, std::size_t width, std::size_t value) {
  std::string s(width - 1, '0');
  for (std::size_t i = width - 1; i-- > 0 && value;) {
    s[i] = static_cast<char>('0' + (value & 7));
    value >>= 3;
  }
  std::memcpy(dst, s.data(), width - 1);
  dst[width - 1] = '\0';
}

inline std::string tar_header(const std::string& name, std::size_t size, char type) {
  std::string h(512, '\0');
  std::memcpy(h.data(), name.data(), std::min<std::size_t>(name.size(), 99));
  tar_octal(h.data() + 100, 8, 0644);
  tar_octal(h.data() + 108, 8, 0);
  tar_octal(h.data() + 116, 8, 0);
  tar_octal(h.data() + 124, 12, size);
  tar_octal(h.data() + 136, 12, 0);
  h[156] = type;
  std::memcpy(h.data() + 257, "ustar\0" "00", 8);
  std::memset(h.data() + 148, ' ', 8);
  unsigned sum = 0;
  for (unsigned char c : h) sum += c;
  tar_octal(h.data() + 148, 7, sum);
  h[155] = ' ';
  return h;
}

inline std::string pax_record(const std::string& key, const std::string& value) {
  const std::string body = " " + key + "=" + value + "\n";
  std::size_t len = body.size() + 1;
  while (std::to_string(len).size() + body.size() != len) ++len;
  return std::to_string(len) + body;
}

/// ustar archive with an optional pax global "comment" (as host archives carry).
inline std::string make_tar(const std::vector<TarFile>& files, const std::string& global_comment = "") {
  std::string out;
  auto add = [&](const std::string& name, const std::string& content, char type) {
    out += tar_header(name, content.size(), type);
    out += content;
    out.append((512 - content.size() % 512) % 512, '\0');
  };
  if (!global_comment.empty()) add("pax_global_header", pax_record("comment", global_comment), 'g');
  for (const auto& f : files) add(f.path, f.content, f.type);
  out.append(1024, '\0');
  return out;
}

inline std::string gzip(const std::string& data) {
  z_stream zs{};
  deflateInit2(&zs, Z_BEST_SPEED, Z_DEFLATED, 15 + 16, 8, Z_DEFAULT_STRATEGY);
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  zs.avail_in = static_cast<uInt>(data.size());
  std::string out(deflateBound(&zs, data.size()) + 32, '\0');
  zs.next_out = reinterpret_cast<Bytef*>(out.data());
  zs.avail_out = static_cast<uInt>(out.size());
  deflate(&zs, Z_FINISH);
  out.resize(zs.total_out);
  deflateEnd(&zs);
  return out;
}

}  // namespace testing_support
