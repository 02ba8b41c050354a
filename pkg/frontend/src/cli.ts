#!/usr/bin/env node
/** Command line wrapper: `plot --kind <k> --in <dirs..> --bin <s> --out <file>`. */
import { realpathSync } from "node:fs";
import { fileURLToPath } from "node:url";

import yargs from "yargs";

import { FIGURE_KINDS, FigureKind, render } from "./figures.js";

export async function main(argv: string[]): Promise<number> {
  const parser = yargs(argv)
    .scriptName("txscale-plot")
    .command("plot", "render one figure from finished run directories", (cmd) =>
      cmd
        .option("kind", {
          type: "string",
          choices: FIGURE_KINDS as unknown as string[],
          demandOption: true,
          describe: "figure kind",
        })
        .option("in", {
          type: "string",
          array: true,
          demandOption: true,
          describe: "run directories (outputs of the simulator CLI)",
        })
        .option("bin", {
          type: "number",
          default: 0.25,
          describe: "histogram bin width in seconds",
        })
        .option("out", {
          type: "string",
          demandOption: true,
          describe: "output SVG path",
        }),
    )
    .demandCommand(1)
    .strict()
    .exitProcess(false)
    .fail((msg, err) => {
      throw err ?? new Error(msg);
    });

  try {
    const args = await parser.parse();
    const result = render({
      kind: args.kind as FigureKind,
      inputs: args.in as string[],
      bin: args.bin as number,
      out: args.out as string,
    });
    console.log(`wrote ${result.out} (${Object.keys(result.series).length} series)`);
    return 0;
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : String(err)}`);
    return 2;
  }
}

const isDirectRun = (() => {
  if (typeof process.argv[1] !== "string") return false;
  try {
    return fileURLToPath(import.meta.url) === realpathSync(process.argv[1]);
  } catch {
    return false;
  }
})();
if (isDirectRun) {
  main(process.argv.slice(2)).then((code) => {
    process.exitCode = code;
  });
}
