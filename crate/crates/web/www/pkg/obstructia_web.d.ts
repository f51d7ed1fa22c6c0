/* tslint:disable */
/* eslint-disable */

/**
 * Non-separable states of a tensor of two GF(2) spaces.
 */
export function gf2_obstructions(dim_a: number, dim_b: number, level_n: number): string;

/**
 * Obstructions to composing two open graphs' reachability relations.
 */
export function opengraph_obstructions(g_text: string, h_text: string, level_n: number): string;

/**
 * Obstructions to surjectivity (level 0) or injectivity (level 1).
 */
export function set_obstructions(fn_text: string, level_n: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly gf2_obstructions: (a: number, b: number, c: number) => [number, number];
    readonly opengraph_obstructions: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly set_obstructions: (a: number, b: number, c: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
