""" lcstorsion configuration

Command-line arguments and config files for :mod:`lcstorsion.cli`.

Settings come, in increasing priority, from the built-in defaults,
``~/lcstorsion.ini``, ``./lcstorsion.ini`` (or the file named with
``--config``), and the command line.  Config files have one section
``[lcstorsion]`` whose keys are the long option names with ``_`` for
``-``; ``$VAR`` references are expanded.

..
   This program is free software: you can redistribute it
   and/or modify it under the terms of the GNU General Public License as
   published by the Free Software Foundation, either version 3 of the
   License, or (at your option) any later version. This program is
   distributed in the hope that it will be useful, but WITHOUT ANY
   WARRANTY; without even the implied warranty of MERCHANTABILITY or
   FITNESS FOR A PARTICULAR PURPOSE.  See the GNU General Public License
   for more details.  You should have received a copy of the GNU General
   Public License along with this program.  If not, see
   <http://www.gnu.org/licenses/>.
"""

import os
import argparse
import configparser

import colorama
from colorama import Fore, Style
colorama.init()

from .claims import ClaimSettings


class ConfigError(ValueError):
  pass


class LcsConfig(object):
  """Configuration for lcstorsion, using argparse and configparser"""

  DEFAULT_CONFIG_FILE = 'lcstorsion.ini'
  SECTION = 'lcstorsion'
  DEFAULT_MAX_DEGREE = 5
  DEFAULT_MAX_VAR = 5
  # multilinear degree six
  DEFAULT_MAX_COMPONENT_DIM = 720
  DEFAULT_COLOR_BG = 'light'

  def __init__(self, argv=None):

    # First partially read the command line to get the config file, then
    # load the config file, and finally read the rest of the arguments, so
    # that command line arguments override config file settings.

    # add_help=False so that -h prints all options from the full parser
    confparser = argparse.ArgumentParser(
      description=__doc__,
      formatter_class=argparse.RawDescriptionHelpFormatter,
      add_help=False
    )
    confparser.add_argument('--config', '-cf',
                            help='choose config file (default {0})'.format(LcsConfig.DEFAULT_CONFIG_FILE))
    args, remaining_argv = confparser.parse_known_args(argv)

    self.config_file = args.config
    if args.config is None:
      if os.path.exists(LcsConfig.DEFAULT_CONFIG_FILE):
        self.config_file = LcsConfig.DEFAULT_CONFIG_FILE
    elif not os.path.exists(self.config_file):
      raise ConfigError('Config file {0} does not exist'.format(self.config_file))

    cp = configparser.RawConfigParser()
    files = [os.path.expanduser('~/' + LcsConfig.DEFAULT_CONFIG_FILE)]
    if self.config_file:
      files.append(self.config_file)
    try:
      cp.read(files)
    except configparser.Error as e:
      raise ConfigError('Cannot read config: {0}'.format(e))
    if cp.has_section(LcsConfig.SECTION):
      config = {k: os.path.expandvars(v) for k, v in cp.items(LcsConfig.SECTION)}
    else:
      config = {}

    parser = argparse.ArgumentParser(
      prog='lcstorsion',
      description='Exact computations in the free associative ring over Z',
      formatter_class=argparse.ArgumentDefaultsHelpFormatter,
      parents=[confparser])
    _add_options(parser, LcsConfig.defaults())
    # options repeated after the command word; no defaults there
    common = argparse.ArgumentParser(add_help=False,
                                     argument_default=argparse.SUPPRESS)
    _add_options(common, None)

    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True
    p = sub.add_parser('member', parents=[common], help='is EXPR in the ideal SPEC')
    p.add_argument('expr')
    p.add_argument('spec', help='T<n>, T32, I32, gamma<n>, custom:<file>')
    p = sub.add_parser('order', parents=[common], help='order of EXPR modulo the ideal SPEC')
    p.add_argument('expr')
    p.add_argument('spec', help='T<n>, T32, I32, gamma<n>, custom:<file>')
    p = sub.add_parser('verify', parents=[common], help='check registered claims')
    p.add_argument('claims', nargs='+', metavar='claim', help='claim id, or all')
    p = sub.add_parser('parse', parents=[common], help='print the canonical form of EXPR')
    p.add_argument('expr')
    sub.add_parser('list', parents=[common], help='list the claim registry')

    # Set the defaults from config, overriding the defaults above
    parser.set_defaults(**config)
    args = parser.parse_args(remaining_argv)

    self.command = args.command
    self.args = args
    self.debuglevel = args.debuglevel
    self.log_file = args.log_file
    try:
      self.max_degree = int(args.max_degree)
      self.max_var = int(args.max_var)
      self.max_component_dim = int(args.max_component_dim)
      self.threads = max(1, int(args.threads))
      self.seed = int(args.seed)
    except ValueError as e:
      raise ConfigError('Bad numeric setting: {0}'.format(e))
    self.colorbg = args.colorbg
    self.json = _flag(args.json)
    self.transforms = _flag(args.transforms)
    self.spec_file = args.spec_file
    self.set_colors_for_bg(self.colorbg)

  @staticmethod
  def defaults():
    return {
      'debuglevel': 'info',
      'log_file': None,
      'max_degree': LcsConfig.DEFAULT_MAX_DEGREE,
      'max_var': LcsConfig.DEFAULT_MAX_VAR,
      'max_component_dim': LcsConfig.DEFAULT_MAX_COMPONENT_DIM,
      'threads': int(os.environ.get('LCSTORSION_THREADS', '1') or 1),
      'colorbg': LcsConfig.DEFAULT_COLOR_BG,
      'json': False,
      'transforms': False,
      'spec_file': None,
      'seed': 0,
    }

  def settings(self):
    return ClaimSettings(max_degree=self.max_degree, max_var=self.max_var,
                         max_component_dim=self.max_component_dim,
                         threads=self.threads, transforms=self.transforms,
                         seed=self.seed)

  def set_colors_for_bg(self, bg):
    if bg == 'dark':
      self.ok_color = Style.BRIGHT + Fore.GREEN
      self.fail_color = Style.BRIGHT + Fore.RED
      self.skip_color = Style.BRIGHT + Fore.YELLOW
      self.reset = Style.RESET_ALL
    elif bg == 'light':
      self.ok_color = Style.DIM + Fore.GREEN
      self.fail_color = Style.BRIGHT + Fore.RED
      self.skip_color = Style.DIM + Fore.MAGENTA
      self.reset = Style.RESET_ALL
    else:
      self.ok_color = self.fail_color = self.skip_color = self.reset = ''


def _flag(value):
  """Booleans from the command line or config file strings."""
  if isinstance(value, bool):
    return value
  return str(value).strip().lower() in ('1', 'yes', 'true', 'on')


def _add_options(parser, defaults):
  """Options accepted before and after the command word."""
  def d(name):
    return argparse.SUPPRESS if defaults is None else defaults[name]
  parser.add_argument('--debuglevel', '-d',
                      choices=['debug', 'info', 'warning', 'error', 'critical'],
                      default=d('debuglevel'), help='debugging level')
  parser.add_argument('--log-file', default=d('log_file'), help='send log to log-file')
  parser.add_argument('--max-degree', type=int, default=d('max_degree'),
                      help='total degree bound of graded verifications')
  parser.add_argument('--max-var', type=int, default=d('max_var'),
                      help='number of variables in graded verifications')
  parser.add_argument('--max-component-dim', type=int, default=d('max_component_dim'),
                      help='refuse components of larger dimension')
  parser.add_argument('--threads', '-j', type=int, default=d('threads'),
                      help='claims checked in parallel (env LCSTORSION_THREADS)')
  parser.add_argument('--colorbg', '-cbg', choices=['light', 'dark', 'none'],
                      default=d('colorbg'),
                      help='background assumed for coloured status words')
  parser.add_argument('--json', action='store_true', default=d('json'),
                      help='one JSON object per line on stdout')
  parser.add_argument('--transforms', action='store_true', default=d('transforms'),
                      help='include SNF transform matrices in witnesses')
  parser.add_argument('--spec-file', default=d('spec_file'),
                      help='generators of a custom ideal, one expression per line')
  parser.add_argument('--seed', type=int, default=d('seed'),
                      help='seed of the randomized claim instances')
