#include "oparax/field_io.hpp"

#include <bit>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "oparax/errors.hpp"

namespace oparax {

namespace {

constexpr char kMagic[4] = {'C', 'P', 'F', '1'};

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i)
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& out, double x) {
  const auto v = std::bit_cast<std::uint64_t>(x);
  for (int i = 0; i < 8; ++i)
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

class ByteReader {
 public:
  ByteReader(const std::string& path, std::string bytes)
      : path_(path), bytes_(std::move(bytes)) {}

  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
      v |= static_cast<std::uint32_t>(
               static_cast<unsigned char>(bytes_[pos_ + static_cast<std::size_t>(i)]))
           << (8 * i);
    pos_ += 4;
    return v;
  }

  double f64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
      v |= static_cast<std::uint64_t>(
               static_cast<unsigned char>(bytes_[pos_ + static_cast<std::size_t>(i)]))
           << (8 * i);
    pos_ += 8;
    return std::bit_cast<double>(v);
  }

  void check_magic() {
    need(4);
    for (int i = 0; i < 4; ++i)
      if (bytes_[pos_ + static_cast<std::size_t>(i)] != kMagic[i])
        fail(errc::bad_magic, "`" + path_ + "` is not a CPF1 file");
    pos_ += 4;
  }

  void check_consumed() const {
    if (pos_ != bytes_.size())
      fail(errc::length_mismatch,
           "`" + path_ + "`: " + std::to_string(bytes_.size() - pos_) +
               " trailing bytes after the declared payload");
  }

 private:
  void need(std::size_t n) const {
    if (pos_ + n > bytes_.size())
      fail(errc::length_mismatch,
           "`" + path_ + "` ends " + std::to_string(pos_ + n - bytes_.size()) +
               " bytes short of the declared payload");
  }

  std::string path_;
  std::string bytes_;
  std::size_t pos_ = 0;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open `" + path + "` for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void dump(const std::string& bytes, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(errc::io_error, "cannot open `" + path + "` for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(errc::io_error, "short write to `" + path + "`");
}

std::string header(std::uint32_t nx, std::uint32_t ny, double x0, double dx,
                   double y0, double dy) {
  std::string bytes;
  bytes.append(kMagic, 4);
  put_u32(bytes, nx);
  put_u32(bytes, ny);
  put_f64(bytes, x0);
  put_f64(bytes, dx);
  put_f64(bytes, y0);
  put_f64(bytes, dy);
  put_f64(bytes, 0.0);
  put_f64(bytes, 0.0);
  return bytes;
}

}  // namespace

void write_field(const ComplexField2D& f, const std::string& path) {
  std::string bytes = header(static_cast<std::uint32_t>(f.nx()),
                             static_cast<std::uint32_t>(f.ny()),
                             f.xgrid().origin(), f.xgrid().spacing(),
                             f.ygrid().origin(), f.ygrid().spacing());
  bytes.reserve(bytes.size() + 16 * f.nx() * f.ny());
  for (const cplx& v : f.values()) {
    put_f64(bytes, v.real());
    put_f64(bytes, v.imag());
  }
  dump(bytes, path);
}

ComplexField2D read_field(const std::string& path) {
  ByteReader r(path, slurp(path));
  r.check_magic();
  const std::uint32_t nx = r.u32();
  const std::uint32_t ny = r.u32();
  const double x0 = r.f64();
  const double dx = r.f64();
  const double y0 = r.f64();
  const double dy = r.f64();
  r.f64();  // reserved
  r.f64();
  ComplexField2D f(Grid1D(nx, x0, dx), Grid1D(ny, y0, dy));
  for (cplx& v : f.values()) {
    const double re = r.f64();
    const double im = r.f64();
    v = cplx{re, im};
  }
  r.check_consumed();
  return f;
}

void write_profile(std::span<const cplx> samples, const Grid1D& ygrid,
                   const std::string& path) {
  if (samples.size() != ygrid.size())
    fail(errc::grid_mismatch, "write_profile: sample count differs from grid");
  std::string bytes = header(1, static_cast<std::uint32_t>(ygrid.size()), 0.0,
                             1.0, ygrid.origin(), ygrid.spacing());
  for (const cplx& v : samples) {
    put_f64(bytes, v.real());
    put_f64(bytes, v.imag());
  }
  dump(bytes, path);
}

Profile read_profile(const std::string& path) {
  ByteReader r(path, slurp(path));
  r.check_magic();
  const std::uint32_t nx = r.u32();
  if (nx != 1)
    fail(errc::length_mismatch,
         "`" + path + "`: a profile must have nx = 1, found " +
             std::to_string(nx));
  Profile p;
  p.ny = r.u32();
  r.f64();  // x0, dx: unused for profiles
  r.f64();
  p.y0 = r.f64();
  p.dy = r.f64();
  r.f64();  // reserved
  r.f64();
  p.samples.resize(p.ny);
  for (cplx& v : p.samples) {
    const double re = r.f64();
    const double im = r.f64();
    v = cplx{re, im};
  }
  r.check_consumed();
  return p;
}

namespace {

void append_g17(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

void export_csv(const ComplexField2D& f, std::size_t ix,
                const std::string& path) {
  if (ix >= f.nx())
    fail(errc::invalid_argument, "export_csv: slice index out of range");
  std::string out = "x,y,re,im,abs\n";
  const double x = f.xgrid().point(ix);
  for (std::size_t m = 0; m < f.ny(); ++m) {
    const cplx v = f.at(ix, m);
    append_g17(out, x);
    out += ',';
    append_g17(out, f.ygrid().point(m));
    out += ',';
    append_g17(out, v.real());
    out += ',';
    append_g17(out, v.imag());
    out += ',';
    append_g17(out, std::abs(v));
    out += '\n';
  }
  dump(out, path);
}

void export_csv(const DecayTable& table, const std::string& path) {
  std::string out = "A,err,bound\n";
  for (const DecayRow& row : table.rows) {
    append_g17(out, row.A);
    out += ',';
    append_g17(out, row.err);
    out += ',';
    append_g17(out, row.bound);
    out += '\n';
  }
  dump(out, path);
}

}  // namespace oparax
