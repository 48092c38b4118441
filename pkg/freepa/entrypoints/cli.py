# Copyright 2025 Google LLC
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# pylint: disable=C0330, g-bad-import-order, g-multiple-import

"""CLI entrypoint for running freepa.

Results are printed as JSON with rationals and surds as decimal strings, e.g.
`freepa conv boxtimes catalan.json catalan.json --n 4` prints
`["1", "3", "12", "55"]`.
"""

from __future__ import annotations

import argparse
import json
import logging
import pathlib
import sys
from collections.abc import Callable, Sequence
from typing import Any

import freepa
from freepa import (
  config as freepa_config,
  exceptions,
  freeprod,
  gpa,
  moments,
  partitions,
  tangle_parser,
  tangles,
  verification,
)
from freepa.adapters import codecs

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


class VerificationFailed(Exception):
  """Carries output of a command whose checks did not pass."""

  def __init__(self, result: Any) -> None:
    super().__init__('verification failed')
    self.result = result


def _positive(value: str) -> int:
  number = int(value)
  if number < 1:
    raise argparse.ArgumentTypeError(f'{value} is not a positive integer')
  return number


def _block(text: str) -> tuple[int, ...]:
  try:
    return tuple(int(part) for part in text.strip().strip('{}').split(','))
  except ValueError as e:
    raise exceptions.PartitionSyntaxError(
      f'{text!r} is not a block like {{1,3}}'
    ) from e


def _block_text(block: Sequence[int]) -> str:
  return '{' + ','.join(map(str, block)) + '}'


def _partition(text: str) -> partitions.Partition:
  return partitions.Partition.from_string(text)


def _dimension_profile(source: str, n: int) -> freeprod.DimensionProfile:
  if pathlib.Path(source).is_file():
    return freeprod.DimensionProfile(codecs.load_profile(source, n))
  return freeprod.DimensionProfile.named(source.removesuffix('.json'), n)


def _vectors(source: str | None) -> list[gpa.LoopVector]:
  return codecs.load_vectors(source) if source else []


def _dump_vectors(vectors: Sequence[gpa.LoopVector]) -> list[dict[str, Any]]:
  return [
    codecs.LoopVectorModel.from_vector(vector).model_dump()
    for vector in vectors
  ]


# nc


def nc_enumerate(args: argparse.Namespace, config: freepa_config.Config) -> Any:
  partition_class = partitions.PartitionClass(args.partition_class)
  cap = (
    config.all_partitions_cap
    if partition_class == partitions.PartitionClass.ALL
    else config.nc_cap
  )
  return [
    str(p)
    for p in partitions.enumerate_partitions(args.n, partition_class, cap)
  ]


def nc_kreweras(args: argparse.Namespace, config: freepa_config.Config) -> Any:
  direction = (
    partitions.KrewerasDirection.INVERSE
    if args.inverse
    else partitions.KrewerasDirection.FORWARD
  )
  return str(partitions.kreweras(_partition(args.partition), direction))


def nc_nested_kreweras(
  args: argparse.Namespace, config: freepa_config.Config
) -> Any:
  return str(partitions.nested_kreweras(_partition(args.partition)))


def nc_depth(args: argparse.Namespace, config: freepa_config.Config) -> Any:
  return {
    _block_text(block): value
    for block, value in partitions.depth(_partition(args.partition)).items()
  }


def nc_surgery(args: argparse.Namespace, config: freepa_config.Config) -> Any:
  partition = _partition(args.partition)
  if args.merge:
    result = partitions.block_surgery(
      partition, 'merge', _block(args.block), _block(args.merge)
    )
  elif args.split is not None:
    result = partitions.block_surgery(
      partition, 'split', _block(args.block), args.split
    )
  else:
    return [str(i) for i in partitions.split_candidates(_block(args.block))]
  return str(result)


def nc_envelope(args: argparse.Namespace, config: freepa_config.Config) -> Any:
  envelope = partitions.enveloping_blocks(
    _partition(args.partition), _block(args.block)
  )
  return {
    'upper': _block_text(envelope.upper),
    'lower': [_block_text(block) for block in envelope.lower],
  }


# cum and conv


def _moment_profile(
  source: str, n: int, check_hankel: bool = False
) -> moments.MomentProfile:
  profile = codecs.load_profile(source, n).prefix(n)
  if check_hankel and not moments.hankel_is_psd(profile):
    logging.error('Hankel matrix of %s is not PSD', profile.name)
    raise VerificationFailed(
      {
        'profile': profile.name,
        'moments': codecs.format_numbers(profile.moments),
        'hankel_psd': False,
      }
    )
  return profile


def cum_transform(
  args: argparse.Namespace, config: freepa_config.Config
) -> Any:
  profile = _moment_profile(args.profile, args.n, args.check_hankel)
  kind = moments.CumulantKind(args.command_name)
  cumulants = moments.cumulants_from_moments(profile, kind)
  return codecs.format_numbers(cumulants.values)


def cum_invert(args: argparse.Namespace, config: freepa_config.Config) -> Any:
  values = codecs.load_profile(args.cumulants, args.n).prefix(args.n).moments
  profile = moments.moments_from_cumulants(
    moments.CumulantProfile(args.kind, values)
  )
  return codecs.format_numbers(profile.moments)


def conv_boxtimes(
  args: argparse.Namespace, config: freepa_config.Config
) -> Any:
  first = _moment_profile(args.first, args.n, args.check_hankel)
  second = _moment_profile(args.second, args.n, args.check_hankel)
  return codecs.format_numbers(
    moments.free_mult_conv(first, second, args.n).moments
  )


def conv_bn_check(
  args: argparse.Namespace, config: freepa_config.Config
) -> Any:
  first = _moment_profile(args.first, args.n, args.check_hankel)
  second = _moment_profile(args.second, args.n, args.check_hankel)
  check = moments.boolean_conv_check(first, second, args.n)
  result = {
    'lhs': codecs.format_numbers(check.lhs),
    'rhs': codecs.format_numbers(check.rhs),
    'equal': check.equal,
  }
  if not check.equal:
    raise VerificationFailed(result)
  return result


# tangle


def tangle_parse(args: argparse.Namespace, config: freepa_config.Config) -> Any:
  return tangle_parser.normalize(args.expression)


def tangle_pi(args: argparse.Namespace, config: freepa_config.Config) -> Any:
  return str(tangles.pi_of(tangle_parser.parse(args.expression).build()))


def tangle_shading(
  args: argparse.Namespace, config: freepa_config.Config
) -> Any:
  tangle = tangle_parser.parse(args.expression).build()
  return str(tangles.shading_partition(tangle))


def tangle_free(args: argparse.Namespace, config: freepa_config.Config) -> Any:
  first = tangle_parser.parse(args.first).build()
  second = tangle_parser.parse(args.second).build()
  composed = tangles.free_compose(first, second)
  return {'tangle': str(composed), 'pi': str(tangles.pi_of(composed))}


def tangle_reduce(
  args: argparse.Namespace, config: freepa_config.Config
) -> Any:
  partition = _partition(args.partition)
  first, second = tangles.reduced_pair(partition)
  form = tangles.interleaving_form(first, second)
  return {
    'first': str(tangle_parser.Tpi(partition)),
    'second': str(tangle_parser.Tpi(partitions.nested_kreweras(partition))),
    'interleaving': str(form.tangle),
    'colors': list(form.colors),
  }


def tangle_fatten(
  args: argparse.Namespace, config: freepa_config.Config
) -> Any:
  tangle = tangles.fatten(_partition(args.partition), args.upper)
  return {
    'tangle': str(tangle),
    'shaded_regions': sum(region.shaded for region in tangle.regions),
  }


# gpa


def gpa_basis(args: argparse.Namespace, config: freepa_config.Config) -> Any:
  spec = codecs.load_spec(args.spec)
  loops = gpa.loop_basis(
    spec, args.n, config.loop_degree_cap, config.loop_dimension_cap
  )
  return [str(loop) for loop in loops]


def gpa_eval(args: argparse.Namespace, config: freepa_config.Config) -> Any:
  spec = codecs.load_spec(args.spec)
  result = gpa.evaluate(spec, args.expression, _vectors(args.inputs))
  return _dump_vectors([result])[0]


def gpa_trace(args: argparse.Namespace, config: freepa_config.Config) -> Any:
  spec = codecs.load_spec(args.spec)
  return [
    codecs.format_number(gpa.trace(spec, vector, args.side))
    for vector in _vectors(args.vectors)
  ]


def gpa_gram(args: argparse.Namespace, config: freepa_config.Config) -> Any:
  spec = codecs.load_spec(args.spec)
  result = gpa.gram(spec, _vectors(args.vectors))
  return {
    'matrix': [codecs.format_numbers(row) for row in result.matrix],
    'rank': result.rank,
    'psd': gpa.is_positive_semidefinite(spec, _vectors(args.vectors)),
  }


def gpa_tl(args: argparse.Namespace, config: freepa_config.Config) -> Any:
  spec = codecs.load_spec(args.spec)
  return _dump_vectors(gpa.tl_image(spec, args.n, config.loop_degree_cap))


def gpa_boolean(args: argparse.Namespace, config: freepa_config.Config) -> Any:
  spec = codecs.load_spec(args.spec)
  if args.source == freeprod.LabelSource.TL:
    realized = {
      k: gpa.tl_image(spec, k, config.loop_degree_cap)
      for k in range(1, args.n + 1)
    }
  else:
    realized = {
      k: [
        gpa.LoopVector.basis(loop)
        for loop in gpa.loop_basis(
          spec, k, config.loop_degree_cap, config.loop_dimension_cap
        )
      ]
      for k in range(1, args.n + 1)
    }
  return _dump_vectors(gpa.boolean_subspace(spec, realized, args.n))


# fp


def fp_dims(args: argparse.Namespace, config: freepa_config.Config) -> Any:
  first = _dimension_profile(args.first, args.n)
  second = _dimension_profile(args.second, args.n)
  if args.kind == 'tensor':
    values = freeprod.tensor_dims(first, second, args.n)
  elif args.kind == 'boolean':
    values = freeprod.boolean_decomposition_dims(first, second, args.n).dims
  else:
    values = freeprod.free_product_dims(first, second, args.n)
  return codecs.format_numbers(values)


def fp_basis(args: argparse.Namespace, config: freepa_config.Config) -> Any:
  first = _dimension_profile(args.first, args.n)
  second = _dimension_profile(args.second, args.n)
  return [
    label.to_dict() for label in freeprod.basis_labels(first, second, args.n)
  ]


def fp_rank(args: argparse.Namespace, config: freepa_config.Config) -> Any:
  first, second = codecs.load_spec(args.first), codecs.load_spec(args.second)
  result = freeprod.concrete_span_rank(
    first, second, args.n, args.labels, config.concrete_rank_cap
  )
  generators = freeprod.generating_rank(first, second, args.n)
  return {
    'rank': str(result.rank),
    'vectors': str(result.vectors),
    'generating_rank': str(generators.rank),
  }


def fp_wreath_moments(
  args: argparse.Namespace, config: freepa_config.Config
) -> Any:
  alpha = codecs.load_profile(args.alpha, args.n)
  beta = codecs.load_profile(args.beta, args.n)
  return codecs.format_numbers(
    freeprod.wreath_character_moments(alpha, beta, args.n).moments
  )


def group_moments(
  args: argparse.Namespace, config: freepa_config.Config
) -> Any:
  generators = [_block(generator) for generator in args.generators]
  profile = moments.perm_group_character_moments(
    generators, args.k, args.degree, config.group_order_cap
  )
  return codecs.format_numbers(profile.moments)


# verify


def verify(args: argparse.Namespace, config: freepa_config.Config) -> Any:
  verifier = verification.Verifier(config).with_suites(*args.suites).run()
  response = verifier.report()
  for report in response.reports:
    for check in report.failures:
      print(
        f'FAILED {report.suite}: {check.name}: {check.witness}', file=sys.stderr
      )
  result = response.model_dump(mode='json')
  if not response.passed:
    raise VerificationFailed(result)
  return result


def _table(result: Any) -> str:
  if isinstance(result, dict) and 'reports' in result:
    return '\n'.join(
      f'{report["suite"]}\t{check["name"]}\t'
      f'{"ok" if check["passed"] else "FAIL"}\t{check["detail"]}'
      for report in result['reports']
      for check in report['checks']
    )
  if isinstance(result, dict):
    return '\n'.join(f'{key}\t{value}' for key, value in result.items())
  if isinstance(result, list):
    return '\n'.join(
      json.dumps(item) if isinstance(item, (dict, list)) else str(item)
      for item in result
    )
  return str(result)


def _emit(result: Any, output_format: freepa_config.OutputFormat) -> None:
  if output_format == freepa_config.OutputFormat.TABLE:
    print(_table(result))
  elif isinstance(result, str):
    print(result)
  else:
    print(json.dumps(result, indent=2))


Handler = Callable[[argparse.Namespace, freepa_config.Config], Any]


def _command(
  group: argparse._SubParsersAction, name: str, handler: Handler, **kwargs: Any
) -> argparse.ArgumentParser:
  parser = group.add_parser(name, **kwargs)
  parser.set_defaults(handler=handler, command_name=name)
  return parser


def _add_check_hankel(parser: argparse.ArgumentParser) -> None:
  parser.add_argument(
    '--check-hankel',
    action='store_true',
    help='Fail when an input profile has a non-PSD Hankel matrix',
  )


def build_parser() -> argparse.ArgumentParser:
  parser = argparse.ArgumentParser(
    prog='freepa', description='Exact free probability and planar algebras.'
  )
  parser.add_argument(
    '--version',
    '-v',
    dest='version',
    action='store_true',
    help='Version of freepa CLI utility',
  )
  parser.add_argument(
    '--loglevel',
    default='WARNING',
    choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
    help='Logging level',
  )
  parser.add_argument(
    '--format',
    dest='output_format',
    choices=[item.value for item in freepa_config.OutputFormat],
    default=None,
    help='Output format, json by default',
  )
  areas = parser.add_subparsers(dest='area')

  nc = areas.add_parser('nc', help='Non-crossing partitions').add_subparsers(
    dest='command', required=True
  )
  command = _command(nc, 'enumerate', nc_enumerate)
  command.add_argument('n', type=_positive)
  command.add_argument(
    '--class',
    dest='partition_class',
    default=partitions.PartitionClass.NONCROSSING.value,
    choices=[item.value for item in partitions.PartitionClass],
  )
  command = _command(nc, 'kreweras', nc_kreweras)
  command.add_argument('partition')
  command.add_argument('--inverse', action='store_true')
  command = _command(nc, 'nested-kreweras', nc_nested_kreweras)
  command.add_argument('partition')
  command = _command(nc, 'depth', nc_depth)
  command.add_argument('partition')
  command = _command(nc, 'surgery', nc_surgery)
  command.add_argument('partition')
  command.add_argument('block')
  surgery = command.add_mutually_exclusive_group()
  surgery.add_argument('--merge', help='Block to merge with')
  surgery.add_argument('--split', type=_positive, help='Split index')
  command = _command(nc, 'envelope', nc_envelope)
  command.add_argument('partition')
  command.add_argument('block')

  cum = areas.add_parser('cum', help='Cumulant transforms').add_subparsers(
    dest='command', required=True
  )
  for name in ('free', 'boolean'):
    command = _command(cum, name, cum_transform)
    command.add_argument('profile', help='Profile JSON file or named profile')
    command.add_argument('--n', type=_positive, required=True)
    _add_check_hankel(command)
  command = _command(cum, 'invert', cum_invert)
  command.add_argument('cumulants', help='JSON file with cumulants as moments')
  command.add_argument(
    '--kind',
    default=moments.CumulantKind.FREE.value,
    choices=[item.value for item in moments.CumulantKind],
  )
  command.add_argument('--n', type=_positive, required=True)

  conv = areas.add_parser('conv', help='Convolutions').add_subparsers(
    dest='command', required=True
  )
  for name, handler in (
    ('boxtimes', conv_boxtimes),
    ('bn-check', conv_bn_check),
  ):
    command = _command(conv, name, handler)
    command.add_argument('first')
    command.add_argument('second')
    command.add_argument('--n', type=_positive, required=True)
    _add_check_hankel(command)

  tangle = areas.add_parser('tangle', help='Planar tangles').add_subparsers(
    dest='command', required=True
  )
  for name, handler in (
    ('parse', tangle_parse),
    ('pi', tangle_pi),
    ('shading', tangle_shading),
  ):
    command = _command(tangle, name, handler)
    command.add_argument('expression')
  command = _command(tangle, 'free', tangle_free)
  command.add_argument('first')
  command.add_argument('second')
  command = _command(tangle, 'reduce', tangle_reduce)
  command.add_argument('partition')
  command = _command(tangle, 'fatten', tangle_fatten)
  command.add_argument('partition')
  command.add_argument(
    '--upper',
    type=int,
    default=None,
    help='Number of upper points of a (k, l)-partition',
  )

  gpa_area = areas.add_parser(
    'gpa', help='Graph planar algebra of a multi-matrix algebra'
  ).add_subparsers(dest='command', required=True)
  for name, handler in (('basis', gpa_basis), ('tl', gpa_tl)):
    command = _command(gpa_area, name, handler)
    command.add_argument('spec', help='Spec JSON file or block sizes like 1,2')
    command.add_argument('--n', type=_positive, required=True)
  command = _command(gpa_area, 'eval', gpa_eval)
  command.add_argument('spec')
  command.add_argument('expression')
  command.add_argument('--inputs', help='JSON file with input vectors')
  command = _command(gpa_area, 'trace', gpa_trace)
  command.add_argument('spec')
  command.add_argument('vectors')
  command.add_argument('--side', default='right', choices=['left', 'right'])
  command = _command(gpa_area, 'gram', gpa_gram)
  command.add_argument('spec')
  command.add_argument('vectors')
  command = _command(gpa_area, 'boolean', gpa_boolean)
  command.add_argument('spec')
  command.add_argument('--n', type=_positive, required=True)
  command.add_argument(
    '--source',
    default=freeprod.LabelSource.TL.value,
    choices=[item.value for item in freeprod.LabelSource],
  )

  fp = areas.add_parser('fp', help='Free products').add_subparsers(
    dest='command', required=True
  )
  command = _command(fp, 'dims', fp_dims)
  command.add_argument('first')
  command.add_argument('second')
  command.add_argument('--n', type=_positive, required=True)
  command.add_argument(
    '--kind', default='free', choices=['free', 'tensor', 'boolean']
  )
  command = _command(fp, 'basis', fp_basis)
  command.add_argument('first')
  command.add_argument('second')
  command.add_argument('--n', type=_positive, required=True)
  command = _command(fp, 'rank', fp_rank)
  command.add_argument('first', help='Spec JSON file or block sizes')
  command.add_argument('second', help='Spec JSON file or block sizes')
  command.add_argument('--n', type=_positive, required=True)
  command.add_argument(
    '--labels',
    default=freeprod.LabelSource.TL.value,
    choices=[item.value for item in freeprod.LabelSource],
  )
  command = _command(fp, 'wreath-moments', fp_wreath_moments)
  command.add_argument('alpha')
  command.add_argument('beta')
  command.add_argument('--n', type=_positive, required=True)

  group = areas.add_parser('group', help='Permutation groups').add_subparsers(
    dest='command', required=True
  )
  command = _command(group, 'moments', group_moments)
  command.add_argument(
    'generators',
    nargs='+',
    help='Permutations in one-line notation, e.g. 2,1,3',
  )
  command.add_argument('--k', type=_positive, required=True)
  command.add_argument('--degree', type=_positive, default=None)

  command = _command(areas, 'verify', verify, help='Run verification suites')
  command.add_argument('suites', nargs='*', default=['all'])
  command.add_argument('--max-n', type=_positive, default=None)
  command.add_argument('--spec', action='append', default=None)
  command.add_argument('--seed', type=int, default=None)
  return parser


def _config(args: argparse.Namespace) -> freepa_config.Config:
  updates = {
    key: value
    for key, value in {
      'max_n': getattr(args, 'max_n', None),
      'seed': getattr(args, 'seed', None),
      'spec_paths': getattr(args, 'spec', None),
      'output_format': args.output_format,
    }.items()
    if value is not None
  }
  return freepa_config.Config(**updates)


def run(argv: Sequence[str] | None = None) -> int:
  """Runs a command and returns its exit code."""
  parser = build_parser()
  try:
    args = parser.parse_args(argv)
  except SystemExit as e:
    return e.code if isinstance(e.code, int) else EXIT_ERROR

  if args.version:
    print(f'freepa version: {freepa.__version__}')
    return EXIT_OK
  if not args.area:
    parser.print_usage(sys.stderr)
    return EXIT_ERROR

  logging.basicConfig(level=args.loglevel)
  try:
    config = _config(args)
    result = args.handler(args, config)
  except VerificationFailed as e:
    _emit(e.result, config.output_format)
    return EXIT_FAILED
  except (exceptions.FreepaError, ValueError) as e:
    print(f'error: {e}', file=sys.stderr)
    return EXIT_ERROR
  _emit(result, config.output_format)
  return EXIT_OK


def main():
  sys.exit(run())


if __name__ == '__main__':
  main()
