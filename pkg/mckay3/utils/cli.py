import functools
from typing import Optional, Callable
import typer
from typer.models import CommandFunctionType, CommandInfo
from mckay3.utils.errors import Error, stderr


def _prefix_alias_str(help: str, alias: str) -> str:
    help_lst = help.split("\n")
    help_lst[0] = f"[\033[1;35m\033[1m{alias}\033[0m] {help_lst[0]}"
    return "\n".join(help_lst)


def command(app: typer.Typer, alias: Optional[str] = None, **kwargs) \
        -> Callable[[CommandFunctionType], CommandFunctionType]:
    """Register `fn` as a subcommand, and under `alias` as a hidden one."""
    def decorator(fn: CommandFunctionType) -> CommandFunctionType:
        app.registered_commands.append(CommandInfo(**kwargs, callback=fn))
        if not alias:
            return fn

        help = getattr(fn, "__doc__", None)
        if help and not getattr(fn, "__help_str_set__", False):
            setattr(fn, "__doc__", _prefix_alias_str(help, alias))
            setattr(fn, "__help_str_set__", True)

        # alias entry overrides `name` and `hidden` of the primary entry only
        app.registered_commands.append(
            CommandInfo(**{**kwargs, "name": alias, "hidden": True}, callback=fn))
        return fn
    return decorator


def reports_errors(fn):
    """Turn package errors raised by a command into a diagnostic and exit code.

    Input errors exit 2, correctness alarms exit 1.
    """
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except Error as e:
            e.display_error()
            raise typer.Exit(code=e.exit_code)
    return wrapper


def usage_error(msg: str) -> typer.Exit:
    stderr.print(f"[bold red]usage error:[/bold red] {msg}")
    return typer.Exit(code=2)
