#!/usr/bin/env node
/**
 * plot --csv <paths...> --column <s|phi|gain> [--epsilon <v>] --out <file>
 *
 * Exit codes: 0 success, 1 usage/validation error, 3 I/O error.
 */
import yargs from 'yargs';

import { CsvError } from './csv';
import { ColumnChoice, FigureError } from './figure';
import { render } from './render';

export function main(argv: string[]): number {
    try {
        const args = yargs(argv)
            .usage('Render benchmark trajectory CSVs as static PNG figures')
            .option('csv', {
                type: 'string', array: true, demandOption: true,
                describe: 'trajectory CSV files (one panel each)',
            })
            .option('column', {
                choices: ['s', 'phi', 'gain'] as const, demandOption: true,
                describe: 'which series to plot',
            })
            .option('epsilon', {
                type: 'number',
                describe: 'overlay +/- band lines (s column only)',
            })
            .option('out', { type: 'string', demandOption: true, describe: 'output PNG path' })
            .option('width', { type: 'number', default: 960 })
            .option('panel-height', { type: 'number', default: 300 })
            .strict()
            .exitProcess(false)
            .fail((msg, err) => {
                throw err ?? new FigureError(msg ?? 'invalid arguments');
            })
            .parseSync();

        const result = render({
            csvPaths: args.csv,
            column: args.column as ColumnChoice,
            epsilon: args.epsilon,
            outPath: args.out,
            width: args.width,
            panelHeight: args['panel-height'],
        });
        console.log(`wrote ${args.out} (${result.width}x${result.height}, `
            + `${result.data.panels.length} panel(s))`);
        return 0;
    } catch (err) {
        if (err instanceof CsvError) {
            console.error(`error: ${err.message}`);
            return err.io ? 3 : 1;
        }
        if (err instanceof FigureError) {
            console.error(`error: ${err.message}`);
            return 1;
        }
        if (err && (err as NodeJS.ErrnoException).code !== undefined) {
            console.error(`error: I/O failure: ${(err as Error).message}`);
            return 3;
        }
        throw err;
    }
}

if (require.main === module) {
    process.exit(main(process.argv.slice(2)));
}
