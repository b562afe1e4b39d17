#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "hasse/cli.hpp"

int main(int argc, char** argv) {
  using hasse::cli::Command;
  using hasse::cli::Format;

  CLI::App app{"Spectra, Wedderburn data and Hasse zeta functions of algebras finite over their centers"};
  app.require_subcommand(1);
  app.fallthrough();

  Command c;
  std::string format = "text";
  std::uint64_t localize = 0;

  app.add_option("--preset", c.preset, "compiled-in description: s3, dihedral, mat2, gauss, c2, rank1 (check-morphism: diag, unit-s3, unit-mat2, aug-s3, sign-s3)");
  app.add_option("--file", c.file, "description file");
  app.add_option("--base", c.base, "base ring for a preset: Z, GF(q) or GF(q)[T]");
  app.add_option("-D", c.degree, "degree bound for F_q[T] fibers and zeta series")->check(CLI::PositiveNumber);
  app.add_option("-N", c.bound, "prime bound for Z fibers and Dirichlet prefixes")->check(CLI::PositiveNumber);
  app.add_option("--fiber", c.fibers, "base maximal ideal: a prime over Z, a monic irreducible over GF(q)[T]");
  auto* loc = app.add_option("--localize", localize, "fiber over the prime p of Z only");
  app.add_flag("--generic", c.generic, "add the generic minimal primes");
  app.add_option("--point", c.point, "point label for neighborhood");
  app.add_option("--with", c.with, "second tensor factor, a preset over the same base");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--threads", c.threads, "worker threads for fiber enumeration")->check(CLI::PositiveNumber);

  const std::map<std::string, std::string> help{
      {"center", "center of the algebra (one fiber over Z or GF(q)[T])"},
      {"radical", "Jacobson radical and its nilpotency index"},
      {"wedderburn", "radical and simple blocks M_r(GF(q^n))"},
      {"points", "closed points over the selected fibers"},
      {"spec", "closed points, generic minimal primes and closures"},
      {"zeta", "Hasse zeta series in u = q^-s to degree D"},
      {"dirichlet", "Euler factors and Dirichlet coefficients to N over Z"},
      {"tensor", "tensor product over the ground field with --with"},
      {"check-morphism", "Procesi condition and pullback of maximal ideals"},
      {"neighborhood", "smallest open neighborhood of a closed point"},
  };
  for (const auto& name : hasse::cli::subcommands()) app.add_subcommand(name, help.at(name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  c.format = format == "machine" ? Format::machine : Format::text;
  if (loc->count() > 0) c.localize = localize;
  return hasse::cli::run(c, std::cout, std::cerr);
}
