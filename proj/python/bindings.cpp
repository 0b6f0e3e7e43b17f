#include <quat/circuits.hpp>
#include <quat/io.hpp>
#include <quat/netlist.hpp>
#include <quat/sop.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace quat;

namespace
{

std::vector<int> values_of( QFunction const& f )
{
  std::vector<int> out;
  out.reserve( f.size() );
  for ( auto v : f.outputs() )
    out.push_back( v.value() );
  return out;
}

InputVector inputs_of( std::vector<int> const& xs )
{
  InputVector v;
  for ( int x : xs )
    v.push_back( Qudit{ x } );
  return v;
}

Op op_of( std::string const& name )
{
  const auto op = parse_op( name );
  if ( !op )
    throw py::value_error( "unknown operator '" + name + "'" );
  return *op;
}

} // namespace

PYBIND11_MODULE( _core, m )
{
  m.doc() = "Quaternary logic synthesis: operators, SOP synthesis, netlists and circuits";

  py::register_exception<parse_error>( m, "ParseError", PyExc_ValueError );

  m.def(
      "apply",
      []( std::string const& op, int a, std::optional<int> b ) {
        const auto o = op_of( op );
        if ( is_unary( o ) )
        {
          if ( b )
            throw py::value_error( op + " takes one operand" );
          return apply_unary( o, Qudit{ a } ).value();
        }
        if ( !b )
          throw py::value_error( op + " takes two operands" );
        return apply_dyadic( o, Qudit{ a }, Qudit{ *b } ).value();
      },
      py::arg( "op" ), py::arg( "a" ), py::arg( "b" ) = py::none() );
  m.def( "operator_tables", &render_operator_tables );

  py::class_<QFunction>( m, "QFunction" )
      .def( py::init( []( unsigned arity, std::vector<int> const& values ) { return qf_from_values( arity, values ); } ),
            py::arg( "arity" ), py::arg( "values" ) )
      .def_property_readonly( "arity", &QFunction::arity )
      .def_property_readonly( "values", &values_of )
      .def( "__call__", []( QFunction const& f, std::vector<int> const& x ) { return f.eval( inputs_of( x ) ).value(); } )
      .def( "__len__", &QFunction::size )
      .def( "__eq__", []( QFunction const& a, QFunction const& b ) { return a == b; } )
      .def( "to_qtt", &write_qtt )
      .def_static( "from_qtt", []( std::string const& text ) { return read_qtt( text ); } )
      .def_static( "random", &qf_random, py::arg( "arity" ), py::arg( "seed" ) )
      .def_static(
          "worst_case", []( unsigned n, int form ) { return worst_case_function( n, form == 1 ? Form::I : Form::II ); },
          py::arg( "arity" ), py::arg( "form" ) );

  py::class_<SopExpr>( m, "SopExpr" )
      .def_property_readonly( "form", []( SopExpr const& e ) { return static_cast<int>( e.form ); } )
      .def_property_readonly( "arity", []( SopExpr const& e ) { return e.arity; } )
      .def_property_readonly( "product_count", []( SopExpr const& e ) { return e.products.size(); } )
      .def_property_readonly( "literal_count", []( SopExpr const& e ) { return literal_count( e ); } )
      .def( "__call__", []( SopExpr const& e, std::vector<int> const& x ) { return eval_sop( e, inputs_of( x ) ).value(); } )
      .def( "tabulate", []( SopExpr const& e ) { return tabulate( e ); } )
      .def( "peephole", &peephole_inverters )
      .def( "use_minmax", &form1_use_minmax )
      .def( "to_qsop", &write_qsop )
      .def_static( "from_qsop", []( std::string const& text ) { return read_qsop( text ); } );

  m.def(
      "synthesize",
      []( QFunction const& f, int form ) {
        if ( form != 1 && form != 2 )
          throw py::value_error( "form must be 1 or 2" );
        return form == 1 ? synthesize_form1( f ) : synthesize_form2( f );
      },
      py::arg( "function" ), py::arg( "form" ) = 2 );

  py::class_<Netlist>( m, "Netlist" )
      .def_property_readonly( "v1", &Netlist::v1 )
      .def_property_readonly( "v2", &Netlist::v2 )
      .def_property_readonly( "gate_count", []( Netlist const& nl ) { return gate_count( nl ); } )
      .def_property_readonly( "depth", []( Netlist const& nl ) { return depth( nl ); } )
      .def_property_readonly( "inputs",
                              []( Netlist const& nl ) {
                                std::vector<std::string> names;
                                for ( auto id : nl.inputs() )
                                  names.push_back( nl.gate( id ).name );
                                return names;
                              } )
      .def_property_readonly( "outputs",
                              []( Netlist const& nl ) {
                                std::vector<std::string> names;
                                for ( auto const& o : nl.outputs() )
                                  names.push_back( o.first );
                                return names;
                              } )
      .def( "count", []( Netlist const& nl, std::string const& kind ) {
        const auto k = parse_gate_kind( kind );
        if ( !k )
          throw py::value_error( "unknown gate kind '" + kind + "'" );
        return count_kind( nl, *k );
      } )
      .def( "simulate",
            []( Netlist const& nl, std::map<std::string, int> const& bindings ) {
              Bindings b;
              for ( auto const& [name, v] : bindings )
                b.emplace( name, Qudit{ v } );
              std::map<std::string, int> out;
              for ( auto const& [name, v] : simulate( nl, b ) )
                out.emplace( name, v.value() );
              return out;
            } )
      .def( "tabulate", []( Netlist const& nl, std::string const& output ) { return tabulate( nl, output ); },
            py::arg( "output" ) = "F" )
      .def( "to_qnet", &write_qnet )
      .def_static( "from_qnet", []( std::string const& text ) { return read_qnet( text ); } );

  m.def(
      "lower",
      []( SopExpr const& e, unsigned v1, unsigned v2, bool expand_equality, bool use_minmax ) {
        return lower_sop( e, v1, v2, LowerOptions{ expand_equality, use_minmax } );
      },
      py::arg( "expr" ), py::arg( "v1" ) = 2, py::arg( "v2" ) = 2, py::arg( "expand_equality" ) = false,
      py::arg( "use_minmax" ) = false );

  m.def(
      "bounds",
      []( int form, unsigned n, unsigned v1, unsigned v2, unsigned n0, unsigned d0 ) {
        const auto r = form == 1 ? bound_form1( n, v1, v2, n0, d0 ) : bound_form2( n, v1, v2 );
        return py::make_tuple( r.n_bound, r.d_bound );
      },
      py::arg( "form" ), py::arg( "arity" ), py::arg( "v1" ) = 2, py::arg( "v2" ) = 2, py::arg( "n0" ) = 1,
      py::arg( "d0" ) = 1 );

  m.def(
      "circuit",
      []( std::string const& name, unsigned n, unsigned v1, unsigned v2 ) {
        const auto kind = parse_circuit_kind( name );
        if ( !kind )
          throw py::value_error( "unknown circuit '" + name + "'" );
        return build_circuit( CircuitSpec{ *kind, n }, v1, v2 );
      },
      py::arg( "name" ), py::arg( "n" ) = 1, py::arg( "v1" ) = 2, py::arg( "v2" ) = 2 );
}
