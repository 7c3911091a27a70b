#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
    Compute a golden series with the current version of Hertzsprung and save it as a b-file.

    For full usage information, run
    ```
        python create_golden_testcase.py -h
    ```
"""

from os.path import join
from sys import argv

from hertzsprung.parsing import format_bfile
from tests.golden_test import GOLDEN_FOLDER
from tests.golden_test import GOLDEN_SERIES

if __name__ == '__main__':

    # Print a usage message.
    help_options = {'-h', '--help'}
    if len(argv) not in {3, 4} or argv[1] in help_options or argv[1] not in GOLDEN_SERIES or not argv[2].isdigit():
        print(f'Compute a golden series with the current version of Hertzsprung and save it to')
        print(f'{GOLDEN_FOLDER}/[NAME].txt.')
        print()
        print(f'USAGE:')
        print(f'    {argv[0]} NAME ORDER [OFFSET]')
        print()
        print(f'REQUIRED ARGUMENTS:')
        print(f'    NAME            The name of the series, one of:')
        print(f'                    {", ".join(sorted(GOLDEN_SERIES))}.')
        print(f'    ORDER           The largest index to compute.')
        print()
        print(f'OPTIONAL ARGUMENTS:')
        print(f'    OFFSET          The first index to save. Defaults to 0.')
        print()
        print(f'OPTIONS:')
        print(f'    -h, --help      Print this usage message and exit.')

        exit(0 if len(argv) == 2 and argv[1] in help_options else 1)

    name = argv[1]
    order = int(argv[2])
    offset = int(argv[3]) if len(argv) == 4 else 0

    # Compute the series.
    values = GOLDEN_SERIES[name](order).integers()[offset:]

    # Save the terms to a file.
    file_path = join(GOLDEN_FOLDER, name + '.txt')
    with open(file_path, 'w', encoding='utf-8') as file:
        file.write(format_bfile(values, offset, name))

    print(f'Saved {len(values)} terms to file {file_path}.')
    exit(0)
