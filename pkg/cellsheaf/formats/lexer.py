# -*- coding: utf-8 -*-
# Copyright 2026 The cellsheaf Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
#     Unless required by applicable law or agreed to in writing, software
#     distributed under the License is distributed on an "AS IS" BASIS,
#     WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#     See the License for the specific language governing permissions and
#     limitations under the License.



""" Splits a document into records.  A record is one line: a keyword,
    positional words and `key=value` options, where a value may be a
    bracketed list spanning spaces.  `#` starts a comment.
"""

import re
from collections import namedtuple

from cellsheaf.exceptions import ParseError

Record = namedtuple('Record', ['line', 'keyword', 'args', 'options'])

_ATOM_RE = re.compile(r'[^\s\[\],=#]+')
_KEYWORD_RE = re.compile(r'^[a-z_]+$')


class _LineScanner(object):
    def __init__(self, text, line):
        self.text = text
        self.line = line
        self.position = 0

    def error(self, message):
        return ParseError(message, line=self.line, column=self.position + 1)

    def skip_spaces(self):
        while self.position < len(self.text) and self.text[self.position] in ' \t':
            self.position += 1

    def at_end(self):
        self.skip_spaces()
        return self.position >= len(self.text) or self.text[self.position] == '#'

    def peek(self):
        return self.text[self.position] if self.position < len(self.text) else ''

    def atom(self):
        match = _ATOM_RE.match(self.text, self.position)
        if not match:
            raise self.error('expected a word, found `{}`'.format(self.peek() or 'end of line'))
        self.position = match.end()
        return match.group(0)

    def value(self):
        if self.peek() == '[':
            return self.bracketed()
        return self.atom()

    def bracketed(self):
        self.position += 1
        items = []
        self.skip_spaces()
        if self.peek() == ']':
            self.position += 1
            return items

        while True:
            self.skip_spaces()
            items.append(self.value())
            self.skip_spaces()
            following = self.peek()
            self.position += 1
            if following == ']':
                return items
            if following != ',':
                self.position -= 1
                raise self.error('expected `,` or `]`, found `{}`'.format(
                    following or 'end of line'))

    def word_or_option(self):
        """ (key, value) for an option, (None, word) otherwise """
        word = self.atom()
        if self.peek() != '=':
            return (None, word)
        self.position += 1
        if self.at_end():
            raise self.error('option `{}` has no value'.format(word))
        return (word, self.value())


def lex_line(text, line):
    """ :returns: a Record, or None for blank and comment lines """
    scanner = _LineScanner(text, line)
    if scanner.at_end():
        return None

    keyword = scanner.atom()
    if not _KEYWORD_RE.match(keyword):
        raise ParseError('`{}` is not a record keyword'.format(keyword), line=line,
                         column=scanner.position - len(keyword) + 1)

    args, options = [], {}
    while not scanner.at_end():
        if scanner.text[scanner.position - 1] not in ' \t':
            raise scanner.error('expected a space')
        (key, value) = scanner.word_or_option()
        if key is None:
            if options:
                raise scanner.error('positional `{}` after options'.format(value))
            args.append(value)
        elif key in options:
            raise scanner.error('option `{}` given twice'.format(key))
        else:
            options[key] = value

    return Record(line=line, keyword=keyword, args=args, options=options)


def lex(text):
    records = []
    for (index, line) in enumerate(text.splitlines()):
        record = lex_line(line, index + 1)
        if record is not None:
            records.append(record)
    return records
