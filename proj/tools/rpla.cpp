/* rpla: reversible PLA synthesis and verification toolkit
 * Copyright (C) 2026
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <rpla/netlist.hpp>
#include <rpla/netlist_io.hpp>
#include <rpla/pla.hpp>
#include <rpla/synth.hpp>
#include <rpla/verify.hpp>

namespace
{

/* exit codes: 0 success, 1 verification/validation failure, 2 usage/parse error */
constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

std::string read_file( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw std::invalid_argument( "cannot open '" + path + "'" );
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

rpla::synth_options options_from_flags( std::string const& mode, std::string const& topology, bool no_reuse )
{
  rpla::synth_options opts;
  opts.mode = mode == "full" ? rpla::array_mode::full : rpla::array_mode::used_only;
  opts.topology = topology == "tree" ? rpla::or_topology::balanced_tree : rpla::or_topology::chain;
  opts.reuse_passthrough = !no_reuse;
  return opts;
}

void print_cost_summary( std::ostream& os, rpla::cost_report const& report )
{
  os << "fredkin=" << report.fredkin_count << " feynman=" << report.feynman_count
     << " ancilla=" << report.ancilla_count << " garbage=" << report.garbage_count
     << " width=" << report.width << " depth=" << report.depth << '\n';
}

int run_synth( std::string const& pla_path, std::string const& out_path,
               std::string const& mode, std::string const& topology, bool no_reuse )
{
  auto const spec = rpla::parse_pla( read_file( pla_path ) );
  auto const nl = rpla::synthesize( rpla::expand_to_minterms( spec ),
                                    options_from_flags( mode, topology, no_reuse ) );
  if ( auto const diags = rpla::validate( nl ); !diags.empty() )
  {
    std::cerr << "error: synthesized netlist failed validation: " << diags.front() << '\n';
    return exit_fail;
  }
  auto const text = rpla::emit_netlist( nl );
  if ( out_path.empty() )
  {
    std::cout << text;
  }
  else
  {
    std::ofstream out( out_path );
    if ( !out )
    {
      throw std::runtime_error( "cannot write '" + out_path + "'" );
    }
    out << text;
  }
  print_cost_summary( std::cerr, rpla::stats( nl ) );
  return exit_ok;
}

int run_sim( std::string const& rnl_path, std::string const& bits, bool show_garbage )
{
  auto const nl = rpla::parse_netlist( read_file( rnl_path ) );
  if ( bits.size() != nl.primary_inputs().size() )
  {
    std::cerr << "error: --input needs " << nl.primary_inputs().size() << " bits, got "
              << bits.size() << '\n';
    return exit_usage;
  }
  std::vector<bool> inputs;
  for ( auto const c : bits )
  {
    if ( c != '0' && c != '1' )
    {
      std::cerr << "error: --input must be a 0/1 string\n";
      return exit_usage;
    }
    inputs.push_back( c == '1' );
  }
  auto const result = rpla::simulate( nl, inputs );
  for ( auto const& [name, bit] : result.outputs )
  {
    std::cout << name << '=' << ( bit ? '1' : '0' ) << '\n';
  }
  if ( show_garbage )
  {
    std::cout << "garbage=";
    for ( auto const bit : result.garbage )
    {
      std::cout << ( bit ? '1' : '0' );
    }
    std::cout << '\n';
  }
  return exit_ok;
}

int run_verify( std::string const& rnl_path, std::string const& pla_path )
{
  auto const nl = rpla::parse_netlist( read_file( rnl_path ) );
  auto const spec = rpla::parse_pla( read_file( pla_path ) );
  auto const report = rpla::verify_against_spec( nl, spec );
  std::cout << "injective=" << ( report.injective ? "true" : "false" ) << '\n';
  if ( report.ok() )
  {
    std::cout << "OK " << report.total_vectors << '/' << report.total_vectors << '\n';
    return exit_ok;
  }
  auto const& first = report.mismatches.front();
  std::cout << "MISMATCH at vector ";
  for ( unsigned i = 0; i < spec.n; ++i )
  {
    std::cout << ( ( first.input_vector >> ( spec.n - 1 - i ) ) & 1 );
  }
  std::cout << " (" << report.mismatches.size() << " of " << report.total_vectors
            << " vectors differ";
  if ( report.mismatches.size() == rpla::max_reported_mismatches )
  {
    std::cout << " or more";
  }
  std::cout << ")\n";
  return exit_fail;
}

int run_stats( std::string const& rnl_path, bool energy, double temperature )
{
  auto const nl = rpla::parse_netlist( read_file( rnl_path ) );
  auto const report = rpla::stats( nl );
  std::cout << "fredkin=" << report.fredkin_count << '\n'
            << "feynman=" << report.feynman_count << '\n'
            << "ancilla=" << report.ancilla_count << '\n'
            << "garbage=" << report.garbage_count << '\n'
            << "width=" << report.width << '\n'
            << "depth=" << report.depth << '\n';
  if ( energy )
  {
    char buffer[64];
    std::snprintf( buffer, sizeof( buffer ), "%.3e", rpla::garbage_energy( nl, temperature ) );
    std::cout << "landauer_joules=" << buffer << '\n';
  }
  return exit_ok;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "reversible PLA synthesis and verification" };
  app.require_subcommand( 1 );

  std::string pla_path, rnl_path, out_path, bits;
  std::string mode = "used", topology = "chain";
  bool no_reuse = false, show_garbage = false, energy = false;
  double temperature = 300.0;

  auto* synth = app.add_subcommand( "synth", "compile a .pla into a reversible netlist" );
  synth->add_option( "pla", pla_path, "input PLA file" )->required();
  synth->add_option( "-o", out_path, "output .rnl path (default: stdout)" );
  synth->add_option( "--mode", mode, "array mode: used|full" )->check( CLI::IsMember( { "used", "full" } ) );
  synth->add_option( "--or-topology", topology, "OR reduction: chain|tree" )->check( CLI::IsMember( { "chain", "tree" } ) );
  synth->add_flag( "--no-reuse", no_reuse, "disable pass-through literal reuse" );

  auto* sim = app.add_subcommand( "sim", "simulate one input vector" );
  sim->add_option( "rnl", rnl_path, "netlist file" )->required();
  sim->add_option( "--input", bits, "input bits, first declared input first" )->required();
  sim->add_flag( "--show-garbage", show_garbage, "also print garbage bits" );

  auto* verify = app.add_subcommand( "verify", "exhaustively check a netlist against a PLA" );
  verify->add_option( "rnl", rnl_path, "netlist file" )->required();
  verify->add_option( "pla", pla_path, "PLA file" )->required();

  auto* stats = app.add_subcommand( "stats", "print cost metrics" );
  stats->add_option( "rnl", rnl_path, "netlist file" )->required();
  stats->add_flag( "--energy", energy, "print the Landauer energy floor of the garbage" );
  stats->add_option( "--temp", temperature, "temperature in kelvin (default 300)" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::ParseError const& e )
  {
    if ( e.get_exit_code() == 0 ) /* --help */
    {
      return app.exit( e );
    }
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try
  {
    if ( synth->parsed() )
    {
      return run_synth( pla_path, out_path, mode, topology, no_reuse );
    }
    if ( sim->parsed() )
    {
      return run_sim( rnl_path, bits, show_garbage );
    }
    if ( verify->parsed() )
    {
      return run_verify( rnl_path, pla_path );
    }
    return run_stats( rnl_path, energy, temperature );
  }
  catch ( rpla::pla_parse_error const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  catch ( rpla::rnl_parse_error const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  catch ( std::invalid_argument const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_fail;
  }
}
