// convert to upper case
int main()
{
    char s[300];
    char *ptr;
    scanf("%s", s);
    for (ptr = s; *ptr; ptr++)
        if (*ptr >= 'a' && *ptr <= 'z')
            *ptr = *ptr - 'a' + 'A';
    printf("%s\n", s);
    return 0;
}
