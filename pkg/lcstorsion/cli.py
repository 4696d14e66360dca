""" lcstorsion command line

Entry point of the ``lcstorsion`` console script::

    lcstorsion member "[x1,x2,x3]*[x4,x5]" T4
    lcstorsion order "[x1*[x2,x3,x4],x5]" gamma4
    lcstorsion --json verify theorem-1.1 lemma-3.2
    lcstorsion verify all --max-degree 5
    lcstorsion parse "[x1,x2]^2"
    lcstorsion list

Exit status is 0 when the command ran (and, for ``verify``, every selected
claim was verified), 1 when a claim failed and 2 for usage, expression or
ideal errors.  Logging goes to stderr or ``--log-file``; stdout carries
only answers, one JSON object per line under ``--json``.

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

import json
import logging
import sys

from . import claims
from . import exprparse
from . import ideals
from . import zlinalg
from .config import ConfigError, LcsConfig

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def debug_level_value(value):
    LEVELS = {'debug': logging.DEBUG,
              'info': logging.INFO,
              'warning': logging.WARNING,
              'error': logging.ERROR,
              'critical': logging.CRITICAL}
    if value in LEVELS:
        return LEVELS[value]
    else:
        assert False, 'Invalid debug level: %s' % value


def setup_logger(debuglevel, log_file=None):
    """
    Sets up the package logger; module loggers (``lcstorsion.ideals``, ...)
    inherit from it.

    :parameters:
        - `debuglevel`: one of `debug`, `info`, `warning`, `error`, or
          `critical`
        - `log_file`: path of the log file, or None for stderr

    :returntype:
        :class:`logging.Logger`
    """
    logger = logging.getLogger('lcstorsion')
    level = debug_level_value(debuglevel)
    logger.setLevel(level)
    for h in list(logger.handlers):
        logger.removeHandler(h)
        h.close()

    formatter = logging.Formatter("%(levelname)s: %(message)s")
    if log_file is not None:
        handler = logging.FileHandler(log_file, mode='w')
    else:
        handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    handler.setFormatter(formatter)
    logger.addHandler(handler)
    logger.propagate = False
    return logger


def _emit(record):
    print(json.dumps(record, sort_keys=True))


def _query(conf):
    """Expression and ideal of a member/order command."""
    f = exprparse.parse_poly(conf.args.expr)
    spec = ideals.parse_spec(conf.args.spec, conf.spec_file)
    return f, spec


def cmd_member(conf):
    f, spec = _query(conf)
    answer = ideals.ideal_member(f, spec, conf.max_component_dim)
    if conf.json:
        _emit({'command': 'member', 'expr': exprparse.format_poly(f),
               'spec': str(spec), 'member': answer})
    else:
        print('true' if answer else 'false')
    return EXIT_OK


def cmd_order(conf):
    f, spec = _query(conf)
    order = ideals.order_mod_ideal(f, spec, conf.max_component_dim)
    if conf.json:
        _emit({'command': 'order', 'expr': exprparse.format_poly(f),
               'spec': str(spec), 'order': str(order)})
    else:
        print(order)
    return EXIT_OK


def cmd_parse(conf):
    f = exprparse.parse_poly(conf.args.expr)
    if conf.json:
        _emit({'command': 'parse', 'poly': exprparse.format_poly(f)})
    else:
        print(exprparse.format_poly(f))
    return EXIT_OK


def cmd_list(conf):
    for claim_id, entry in claims.REGISTRY.items():
        if conf.json:
            _emit({'claim_id': claim_id, 'description': entry.description})
        else:
            print('{0:20} {1}'.format(claim_id, entry.description))
    return EXIT_OK


def _status_word(conf, status):
    color = {claims.VERIFIED: conf.ok_color,
             claims.FAILED: conf.fail_color,
             claims.SKIPPED: conf.skip_color}[status]
    return '{0}{1}{2}'.format(color, status, conf.reset)


def cmd_verify(conf):
    reports = claims.run_claims(conf.args.claims, conf.settings())
    failed = False
    for report in reports:
        if report.status == claims.FAILED:
            failed = True
        if conf.json:
            print(report.to_json())
        else:
            print('{0:20} {1:>10} ms  {2}'.format(
                report.claim_id, report.elapsed_ms, _status_word(conf, report.status)))
            if report.status != claims.VERIFIED:
                print('    ' + json.dumps(report.witnesses, sort_keys=True))
    return EXIT_FAILED if failed else EXIT_OK


COMMANDS = {
    'member': cmd_member,
    'order': cmd_order,
    'verify': cmd_verify,
    'parse': cmd_parse,
    'list': cmd_list,
}


def main(argv=None):
    '''
    Reads the command line and config files, starts logging and runs the
    command.  Returns the exit status; the console script passes it to
    sys.exit.
    '''
    try:
        conf = LcsConfig(argv)
    except ConfigError as e:
        sys.stderr.write('lcstorsion: {0}\n'.format(e))
        return EXIT_USAGE

    setup_logger(conf.debuglevel, conf.log_file)
    log = logging.getLogger('lcstorsion.cli')
    log.debug('command %s with %s', conf.command, conf.settings())

    try:
        return COMMANDS[conf.command](conf)
    except (exprparse.ExprSyntaxError, exprparse.ExprTooLarge, ideals.SpecError,
            claims.UnknownClaimError, zlinalg.DimensionError) as e:
        sys.stderr.write('lcstorsion: {0}\n'.format(e))
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
