int main()
{
    char str[1000], ch;
    int cnt = 0, i = 0;
    gets(str);
    while ((ch = str[i++]) != '\0') {
        switch (ch) {
        case 'a': case 'e': case 'i': case 'o': case 'u':
        case 'A': case 'E': case 'I': case 'O': case 'U':
            cnt++;
            break;
        default:
            break;
        }
    }
    printf("%d\n", cnt);
    return 0;
}
